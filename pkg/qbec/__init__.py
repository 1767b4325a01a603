"""qbec: kênh binding-entanglement từ trạng thái bound entangled."""

__version__ = "0.1.0"
