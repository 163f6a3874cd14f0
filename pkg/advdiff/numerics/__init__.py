"""
AdvDiff Numerics

求积、闭式模板、装配、三对角求解与验证

子模块按需导入：model 层依赖 quadrature，而 assembly/solve/verify 又依赖 model 层
"""

__all__ = ["quadrature", "stencils", "assembly", "solve", "verify"]
