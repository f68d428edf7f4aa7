"""Hierarchical subgoal navigation and question answering in procedural grid houses."""

__version__ = "0.1.0"
