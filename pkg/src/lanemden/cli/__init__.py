# CLI command modules for lanemden.
