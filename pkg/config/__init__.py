"""Configuration module for the SPARC toolchain."""
