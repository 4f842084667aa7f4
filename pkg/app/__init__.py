"""CLI application layers around the fcalc numerical core."""
