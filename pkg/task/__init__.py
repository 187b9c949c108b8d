"""uvt-crystal 的单元测试"""
