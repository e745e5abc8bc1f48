"""Main entry point for the finecat MCP server."""

import logging
import sys

from .server import log_level, mcp


def main():
    """Main entry point."""
    # stdout carries the MCP stream
    logging.basicConfig(level=log_level, stream=sys.stderr)
    mcp.run()


if __name__ == "__main__":
    main()
