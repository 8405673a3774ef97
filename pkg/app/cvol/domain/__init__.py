"""Complex volume domain module initialization."""
