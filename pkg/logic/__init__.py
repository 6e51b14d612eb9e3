"""Term calculus shared by sort evaluation and both grounders."""
