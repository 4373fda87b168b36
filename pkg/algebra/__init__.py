"""代数层 - 自由群词、约化 Magnus 展开、Hall 基、纯辫子与链环不变量"""
