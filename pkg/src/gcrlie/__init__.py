"""Exact computations with Lie subalgebras of gl_n, sl_n and pgl_n:
complete reducibility, semisimplification and the checks around them."""

__version__ = "0.1.0"
