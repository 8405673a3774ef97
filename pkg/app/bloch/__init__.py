"""Extended Bloch group module initialization."""
