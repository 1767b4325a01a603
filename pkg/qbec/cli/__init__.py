"""Giao diện dòng lệnh của qbec."""
