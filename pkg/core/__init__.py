"""共享模块 - 配置、错误类型、Hall 基缓存数据库"""
