"""工具模块 - 日志与输出格式"""
