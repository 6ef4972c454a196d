"""CLI commands for semband."""

__all__: list[str] = []
