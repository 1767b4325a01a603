"""Cấu hình, logging và xử lý lỗi dùng chung."""
