# errors.py
"""
Errors - Cây ngoại lệ của youngrep
"""


class YoungRepError(Exception):
    """Lớp gốc cho mọi lỗi của youngrep"""


class ParseError(YoungRepError, ValueError):
    """Chuỗi hoán vị / phân hoạch / tableau sai định dạng"""


class DegreeMismatchError(YoungRepError, ValueError):
    """Kết hợp hoán vị hoặc tableau khác bậc"""


class CellOutsideDiagramError(YoungRepError, ValueError):
    """Ô nằm ngoài biểu đồ Ferrers"""


class LimitError(YoungRepError):
    """Vượt giới hạn liệt kê hoặc giới hạn của oracle"""


class UnsupportedOrderError(LimitError):
    """Thứ tự cơ sở không dùng được cho bậc này"""


class GeneratorIndexError(YoungRepError, ValueError):
    """Chỉ số i của s_i nằm ngoài 1..n-1"""


class GarnirPairError(YoungRepError, ValueError):
    pass


class ColumnsNotSortedError(YoungRepError, ValueError):
    pass


class HookFormulaError(YoungRepError, ArithmeticError):
    """Tích móc không chia hết n! - bảng móc sai"""


class OracleError(YoungRepError):
    pass


class InconsistentSystemError(OracleError):
    """Vector nằm ngoài span của các polytabloid chuẩn"""


class NonIntegralSolutionError(OracleError):
    """Tọa độ ra phân số (lệch thứ tự cơ sở)"""


class CharacterError(YoungRepError, ValueError):
    """Hàng đặc trưng không khớp các lớp liên hợp"""
