"""Test suite for the SPARC toolchain."""
