"""Complex volume module initialization."""
