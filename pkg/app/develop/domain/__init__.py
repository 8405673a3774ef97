"""Development domain module initialization."""
