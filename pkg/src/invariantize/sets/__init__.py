"""Point sets and respect relations as subset-lattice engine instances."""
