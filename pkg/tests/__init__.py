"""Test suite for finecat."""
