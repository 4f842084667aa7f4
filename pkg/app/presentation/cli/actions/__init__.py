"""Action handlers for CLI commands."""
