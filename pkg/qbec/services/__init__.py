"""Services layer: đại số tuyến tính, trạng thái, kênh và báo cáo."""
