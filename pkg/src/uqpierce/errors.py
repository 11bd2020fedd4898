"""Exception types raised across the package."""


class DivisionByZero(ZeroDivisionError):
    pass


class ZeroQuantumInteger(ArithmeticError):
    """A quantum integer vanished at the chosen root of unity."""


class InvalidSpec(ValueError):
    pass


class MixedPresentation(TypeError):
    """Operands belong to different presentations (or different quotients)."""


class CoidealCheckFailed(RuntimeError):
    pass


class NotInvertible(ArithmeticError):
    pass


class BlockInversionFailed(ArithmeticError):
    pass


class UnknownSuite(KeyError):
    pass


class ExpressionSyntaxError(SyntaxError):
    def __init__(self, message, text, pos):
        line = text.count("\n", 0, pos) + 1
        col = pos - (text.rfind("\n", 0, pos) + 1) + 1
        super().__init__(f"{message} (line {line}, column {col})")
        self.line = line
        self.column = col
        self.pos = pos
