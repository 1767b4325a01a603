"""
E2E tests cho các luồng dòng lệnh chính.
"""
