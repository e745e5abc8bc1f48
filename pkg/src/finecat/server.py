"""MCP server exposing the tower, the triangles, the oracles and the identity suite."""

import os
from typing import Literal, Optional

from dotenv import load_dotenv
from mcp.server.fastmcp import FastMCP

from . import cli, core, identities, oracle
from .levels import LEVEL_REGISTRY, get_supported_levels, get_triangle_levels
from .validators import (
    validate_choice,
    validate_level,
    validate_positive,
)

# Load environment variables
load_dotenv()

# Initialize FastMCP server
mcp = FastMCP("Fine-Catalan Tower")

FormatType = Literal["table", "csv", "json", "bfile"]
MethodType = Literal["conv", "matrix", "closed"]

max_rows = int(os.getenv("FINECAT_MAX_ROWS", "60"))
log_level = os.getenv("FINECAT_LOG_LEVEL", "WARNING").upper()


def _bounded(value: int, name: str) -> int:
    """Validate a size argument against FINECAT_MAX_ROWS."""
    validate_positive(value, name)
    if value > max_rows:
        raise ValueError(f"{name} {value} exceeds FINECAT_MAX_ROWS={max_rows}")
    return value


@mcp.tool()
async def sequence(m: int, n: int, format: FormatType = "table") -> str:
    """Get f_m(1..n) from the Fine tower.

    Args:
        m: Tower level 0..4 (0 = Fine numbers, 2 = Catalan numbers)
        n: Number of terms
        format: table, csv, json or bfile. Default: table

    Returns:
        The terms rendered in the requested format
    """
    try:
        validate_level(m, get_supported_levels())
        n = _bounded(n, "n")
        format = validate_choice(format, cli.FORMATS, "format")
        return cli.render_sequence(m, core.tower_sequence(m, n), format)
    except Exception as e:
        return f"Error computing sequence: {str(e)}"


@mcp.tool()
async def triangle(
    m: int, rows: int, method: MethodType = "conv", format: FormatType = "table"
) -> str:
    """Get rows 1..rows of the colored-hill triangle G_m.

    Args:
        m: Triangle level 1..4
        rows: Number of rows
        method: conv (convolution of f_{m-1}), matrix (G_1 . L^(m-1)) or closed
        format: table, csv, json or bfile. Default: table

    Returns:
        The triangle rendered in the requested format
    """
    try:
        validate_level(m, get_triangle_levels())
        rows = _bounded(rows, "rows")
        method = validate_choice(method, cli.METHODS, "method")
        format = validate_choice(format, cli.FORMATS, "format")
        built = cli.TRIANGLE_BUILDERS[method](m, rows)
        return cli.render_triangle(m, built, method, format)
    except Exception as e:
        return f"Error computing triangle: {str(e)}"


@mcp.tool()
async def verify_identity(
    identity_id: str, max_n: int = 20, format: Literal["table", "json"] = "table"
) -> str:
    """Check an identity, or every variant of a family, for all cells with n <= max_n.

    Args:
        identity_id: Identity id (I-exotic-8.corrected) or family (I-exotic-8)
        max_n: Largest n to check (default: 20)
        format: table or json. Default: table

    Returns:
        Verdict per record with counterexamples
    """
    try:
        max_n = _bounded(max_n, "max_n")
        records = identities.REGISTRY.select(identity_id)
        runner = identities.IdentityRunner(identities.REGISTRY)
        reports = runner.run_records(records, max_n)
        if format == "json":
            return identities.reports_to_json(reports)
        return "\n".join(identities.report_lines(reports))
    except Exception as e:
        return f"Error verifying identity: {str(e)}"


@mcp.tool()
async def list_identities() -> str:
    """List every registered identity with its expected verdict.

    Returns:
        One line per identity
    """
    result = f"REGISTERED IDENTITIES ({len(identities.REGISTRY)}):\n"
    result += "=" * 40 + "\n\n"
    for record in identities.REGISTRY:
        cap = f", n <= {record.cap}" if record.cap is not None else ""
        result += f"- {record.id} [{record.expected.value}{cap}]\n"
        result += f"  {record.description}\n"
    return result


@mcp.tool()
async def oracle_count(
    kind: Literal["colored", "total", "ballot", "ternary", "hillfree"],
    n: int,
    k: Optional[int] = None,
    m: Optional[int] = None,
) -> str:
    """Count objects by exhaustive enumeration.

    Args:
        kind: colored (needs k, m), total (needs m), ballot (needs k), ternary
            (k optional) or hillfree
        n: Row index; paths have semilength n-1, ternary words length 2n-1
        k: Column index where the kind needs one
        m: Number of hill colors where the kind needs one

    Returns:
        The exact count
    """
    try:
        kind = validate_choice(kind, cli.ORACLE_KINDS, "kind")
        count = oracle.count_kind(kind, n, k, m)
        return f"{kind} count for n={n}, k={k}, m={m}: {count}"
    except Exception as e:
        return f"Error counting: {str(e)}"


@mcp.tool()
async def bijection(n: int, k: Optional[int] = None, mode: Literal["list", "roundtrip"] = "roundtrip") -> str:
    """Map 2-colored Dyck paths to ballot words, or check the map both ways.

    Args:
        n: Row index, at most 8
        k: Column; paths with n-k hills in color 2 (default: every k)
        mode: list (each path with its word) or roundtrip. Default: roundtrip

    Returns:
        The pairs, or the roundtrip verdict
    """
    try:
        validate_positive(n, "n")
        if mode == "roundtrip":
            result = oracle.check_bijection(n, k)
            if result.ok:
                return f"ok, {result.pairs} pairs"
            return "\n".join(result.failures)
        columns = [k] if k is not None else list(range(1, n + 1))
        lines = [
            f"{oracle.render_colored(path)} {cli.ARROW} {word}"
            for column in columns
            for path, word in oracle.bijection_pairs(n, column)
        ]
        return "\n".join(lines)
    except Exception as e:
        return f"Error running bijection: {str(e)}"


@mcp.tool()
async def list_levels() -> str:
    """List the tower levels and what they count.

    Returns:
        One block per level
    """
    result = "FINE TOWER LEVELS:\n"
    result += "=" * 40 + "\n\n"
    for m, config in LEVEL_REGISTRY.items():
        result += f"- f{m}: {config.name}, f{m}(n) = {config.sequence}\n"
        result += f"  Counts: {config.paths}\n"
        if config.triangle:
            result += f"  g{m}(n,k) = {config.triangle} ({config.closed_form})\n"
        result += "\n"
    result += f"Sizes are limited to {max_rows} (FINECAT_MAX_ROWS)."
    return result
