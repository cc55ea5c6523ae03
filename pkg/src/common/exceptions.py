"""
异常定义模块，所有校验相关的错误都继承自 VerifyError
命令行的错误处理中间件按异常类型决定退出码
"""


class VerifyError(Exception):
    """校验库的基础异常"""


# ---------- 精确代数 ----------
class NonUnitConstantTerm(VerifyError):
    """q^0 系数（或常数项）不可逆"""


class NonNilpotentInput(VerifyError):
    """输入的常数项不为零，无法按幂零元展开"""


class ZeroDenominator(VerifyError):
    """有理函数分母为零"""


class PoleAtEvaluationPoint(VerifyError):
    """求值点恰好是有理函数的极点"""


# ---------- 示性类 ----------
class UnpairedRoots(VerifyError):
    """实/自旋丛的根没有按 ±(root, weight) 成对出现"""


class OddHalfWeight(VerifyError):
    """旋量特征中出现了非整数的 λ 指数"""


# ---------- 全局指标 ----------
class DimensionTooSmall(VerifyError):
    """维数 m 太小，无法构造所需的扭曲丛"""


class UnderdeterminedSystem(VerifyError):
    """线性方程组在施加符号差约束后仍有剩余自由度"""


class NoSolution(VerifyError):
    """线性方程组无解"""


# ---------- 等变 Lefschetz ----------
class DuplicateWeights(VerifyError):
    """线性模型的环境权重有重复"""


class ZeroNormalWeight(VerifyError):
    """法丛权重为零"""


class PoleSurvivesReduction(VerifyError):
    """约化后局部项之和仍有极点"""


class NonIntegralIndex(VerifyError):
    """Jacobi 指标不是整数，说明权重约定有误"""


class MissingNormalization(VerifyError):
    """Pin(2) 不动点所在分支的 γ 权重不为零"""


class InvalidFixedPointData(VerifyError):
    """不动点数据违反数据模型约束"""


# ---------- 数值部分 ----------
class TailBoundViolation(VerifyError):
    """乘积截断的尾部误差界超出容差"""


class MatrixNotUnimodular(VerifyError):
    """矩阵不在 SL2(Z) 中"""


class PoleProximity(VerifyError):
    """采样点离格点太近"""


class CancellationFailure(VerifyError):
    """局部项的极点在求和中没有抵消"""


# ---------- 命令行 ----------
class FixtureParseError(VerifyError):
    """夹具文件无法解析或不满足类型约束"""


class CheckFailed(VerifyError):
    """至少一项校验失败"""


class InfeasibleParams(VerifyError):
    """夹具生成参数不可行"""


class ConfigError(VerifyError):
    """运行配置不合法（截断阶数为负、容差非正等）"""
