"""Command-line interface for running and inspecting experiments."""

__all__: list[str] = []
