"""Extended Dynamic Monge-Kantorovich transport simulator."""

__version__ = "0.1.0"
