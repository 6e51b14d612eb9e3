"""Shortest-path benchmark: instance generator, verification and sweep report."""
from bench.generator import BenchInstance, bfs_distances, encode_instance, gen_shortest_path

__all__ = ["BenchInstance", "bfs_distances", "encode_instance", "gen_shortest_path"]
