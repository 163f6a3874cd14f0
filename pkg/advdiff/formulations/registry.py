"""
格式注册系统 - 管理和获取离散格式
"""

from typing import Dict, Type, Union

from .base import FormulationKernel
from .artificial import ArtificialDiffusionKernel
from .galerkin import GalerkinKernel
from .weighted import WeightedKernel
from advdiff.model.system import Formulation


class FormulationRegistry:
    """格式注册表，管理所有可用的离散格式"""

    _kernels: Dict[Formulation, Type[FormulationKernel]] = {}
    _initialized = False

    @classmethod
    def _initialize(cls):
        if cls._initialized:
            return

        cls.register(Formulation.GALERKIN, GalerkinKernel)
        cls.register(Formulation.ARTIFICIAL, ArtificialDiffusionKernel)
        cls.register(Formulation.WEIGHTED, WeightedKernel)
        cls._initialized = True

    @classmethod
    def register(cls, name: Formulation, kernel_class: Type[FormulationKernel]):
        """注册一个格式类

        Args:
            name: 格式标签
            kernel_class: 格式类
        """
        cls._kernels[Formulation.parse(name)] = kernel_class

    @classmethod
    def get_kernel(cls, name: Union[str, Formulation]) -> FormulationKernel:
        """获取格式实例

        Raises:
            ValueError: 格式不存在时
        """
        cls._initialize()
        key = Formulation.parse(name)
        if key not in cls._kernels:
            raise ValueError(f"formulation '{key.value}' is not registered")
        return cls._kernels[key]()

    @classmethod
    def list_kernels(cls) -> Dict[str, str]:
        """格式名称到描述的映射"""
        cls._initialize()
        return {name.value: kernel().description for name, kernel in cls._kernels.items()}

    @classmethod
    def exists(cls, name: Union[str, Formulation]) -> bool:
        cls._initialize()
        try:
            return Formulation.parse(name) in cls._kernels
        except ValueError:
            return False


def get_formulation(name: Union[str, Formulation]) -> FormulationKernel:
    """获取格式实例（便捷函数）"""
    return FormulationRegistry.get_kernel(name)


def list_formulations() -> Dict[str, str]:
    """列出所有格式及其描述（便捷函数）"""
    return FormulationRegistry.list_kernels()
