# perm.py
"""
Permutations - Hoán vị của {1..n}: đọc, hợp thành, dấu, kiểu chu trình,
lớp liên hợp và từ chuyển vị kề
"""

import itertools
import logging
import math
import re
from dataclasses import dataclass

from .config import ENUMERATION_LIMIT
from .errors import DegreeMismatchError, GeneratorIndexError, LimitError, ParseError
from .shapes import Partition, partitions_of

logger = logging.getLogger(__name__)

_CYCLE_RE = re.compile(r"\(([^()]*)\)")
_ONE_LINE_RE = re.compile(r"^\[([^\[\]]*)\]$")


@dataclass(frozen=True)
class Permutation:
    """Hoán vị dạng một dòng: images[i - 1] = sigma(i)"""
    images: tuple

    def __post_init__(self):
        images = tuple(int(v) for v in self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"{images} is not a permutation of 1..{len(images)}")
        object.__setattr__(self, "images", images)

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def is_identity(self) -> bool:
        """Kiểm tra phần tử đơn vị"""
        return all(v == i for i, v in enumerate(self.images, start=1))

    def cycles(self) -> list:
        """Các chu trình không tầm thường, mỗi chu trình bắt đầu ở phần tử nhỏ nhất"""
        seen = set()
        out = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            x = self(start)
            while x != start:
                cycle.append(x)
                seen.add(x)
                x = self(x)
            if len(cycle) > 1:
                out.append(tuple(cycle))
        return out

    def __str__(self):
        if self.is_identity():
            return "e"
        return "".join("(" + " ".join(str(x) for x in c) + ")" for c in self.cycles())

    def one_line(self) -> str:
        return "[" + ",".join(str(v) for v in self.images) + "]"


@dataclass(frozen=True)
class GeneratorWord:
    """Từ chuyển vị kề: chữ i là s_i = (i i+1), chữ bên phải tác động trước"""
    n: int
    letters: tuple = ()

    def __post_init__(self):
        letters = tuple(int(i) for i in self.letters)
        bad = [i for i in letters if not 1 <= i <= self.n - 1]
        if bad:
            raise GeneratorIndexError(f"letters {bad} out of range 1..{self.n - 1}")
        object.__setattr__(self, "letters", letters)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def evaluate(self) -> Permutation:
        """Tính hoán vị của từ, chữ bên phải tác động trước"""
        return evaluate(self)

    def __str__(self):
        return "".join(f"({i} {i + 1})" for i in self.letters)


def identity(n: int) -> Permutation:
    """Phần tử đơn vị của S_n"""
    return Permutation(tuple(range(1, n + 1)))


def transposition(n: int, i: int, j: int) -> Permutation:
    """Chuyển vị (i j) trong S_n"""
    images = list(range(1, n + 1))
    images[i - 1], images[j - 1] = j, i
    return Permutation(tuple(images))


def adjacent(n: int, i: int) -> Permutation:
    """s_i = (i i+1)"""
    return transposition(n, i, i + 1)


def from_cycles(n: int, cycles) -> Permutation:
    """Tích các chu trình, chu trình bên phải tác động trước"""
    result = identity(n)
    for cycle in cycles:
        images = list(range(1, n + 1))
        for k, x in enumerate(cycle):
            images[x - 1] = cycle[(k + 1) % len(cycle)]
        result = compose(result, Permutation(tuple(images)))
    return result


def parse_cycles(text: str, n: int) -> Permutation:
    """Đọc dạng chu trình "(1 2)(3 4)"; "" hoặc "e" là phần tử đơn vị"""
    stripped = text.strip()
    if stripped in ("", "e"):
        return identity(n)

    # Everything outside the parenthesised groups must be whitespace
    leftover = _CYCLE_RE.sub("", stripped)
    if leftover.strip():
        raise ParseError(f"malformed cycle notation {text!r}")

    cycles = []
    for body in _CYCLE_RE.findall(stripped):
        tokens = body.replace(",", " ").split()
        if not tokens:
            raise ParseError(f"empty cycle in {text!r}")
        try:
            entries = [int(tok) for tok in tokens]
        except ValueError:
            raise ParseError(f"non-integer entry in cycle ({body}) of {text!r}")
        for x in entries:
            if not 1 <= x <= n:
                raise ParseError(f"entry {x} out of range 1..{n} in {text!r}")
        if len(set(entries)) != len(entries):
            raise ParseError(f"repeated entry in cycle ({body}) of {text!r}")
        cycles.append(entries)
    return from_cycles(n, cycles)


def parse_one_line(text: str, n: int = None) -> Permutation:
    """Đọc dạng một dòng "[2,1,4,3]" """
    m = _ONE_LINE_RE.match(text.strip())
    if not m:
        raise ParseError(f"malformed one-line permutation {text!r}")
    try:
        images = tuple(int(tok) for tok in m.group(1).replace(",", " ").split())
    except ValueError:
        raise ParseError(f"non-integer entry in {text!r}")
    if n is not None and len(images) != n:
        raise ParseError(f"{text!r} has degree {len(images)}, expected {n}")
    try:
        return Permutation(images)
    except ValueError as e:
        raise ParseError(str(e))


def parse_permutation(text: str, n: int) -> Permutation:
    """Đọc hoán vị: dạng một dòng nếu bắt đầu bằng "[", ngược lại dạng chu trình"""
    if text.strip().startswith("["):
        return parse_one_line(text, n)
    return parse_cycles(text, n)


def compose(sigma: Permutation, tau: Permutation) -> Permutation:
    """(sigma o tau)(x) = sigma(tau(x)) - tau tác động trước"""
    if sigma.n != tau.n:
        raise DegreeMismatchError(f"cannot compose degree {sigma.n} with degree {tau.n}")
    return Permutation(tuple(sigma.images[t - 1] for t in tau.images))


def inverse(sigma: Permutation) -> Permutation:
    """Hoán vị nghịch đảo"""
    images = [0] * sigma.n
    for i, v in enumerate(sigma.images, start=1):
        images[v - 1] = i
    return Permutation(tuple(images))


def inversions(sigma: Permutation) -> int:
    """Số nghịch thế của dạng một dòng"""
    a = sigma.images
    return sum(1 for i in range(len(a)) for j in range(i + 1, len(a)) if a[i] > a[j])


def sign(sigma: Permutation) -> int:
    """Dấu của hoán vị, (-1)^inversions"""
    return -1 if inversions(sigma) % 2 else 1


def cycle_type(sigma: Permutation) -> Partition:
    """Kiểu chu trình dưới dạng phân hoạch của n"""
    lengths = [len(c) for c in sigma.cycles()]
    lengths += [1] * (sigma.n - sum(lengths))
    return Partition(tuple(sorted(lengths, reverse=True)))


def check_enumerable(n: int):
    """Kiểm tra n nằm trong 1..ENUMERATION_LIMIT"""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if n > ENUMERATION_LIMIT:
        raise LimitError(f"n={n} exceeds the enumeration limit {ENUMERATION_LIMIT} ({n}! elements)")


def all_permutations(n: int) -> list:
    """Toàn bộ n! phần tử của S_n, thứ tự từ điển theo dạng một dòng"""
    check_enumerable(n)
    return [Permutation(p) for p in itertools.permutations(range(1, n + 1))]


def conjugacy_classes(n: int) -> dict:
    """Các lớp liên hợp
    Returns: dict kiểu chu trình -> list phần tử, khóa tăng dần
    """
    check_enumerable(n)
    classes = {lam: [] for lam in partitions_of(n)}
    for sigma in all_permutations(n):
        classes[cycle_type(sigma)].append(sigma)
    logger.debug("S_%d class sizes: %s", n, {str(k): len(v) for k, v in classes.items()})
    return classes


def class_size(lam: Partition) -> int:
    """n! / prod(k^m_k * m_k!)"""
    denom = 1
    for k in set(lam.parts):
        m = lam.parts.count(k)
        denom *= k ** m * math.factorial(m)
    return math.factorial(lam.n) // denom


def class_representative(lam: Partition) -> Permutation:
    """Đại diện lớp: các phần thành chu trình liên tiếp, (3,1) -> (1 2 3)"""
    cycles = []
    start = 1
    for part in lam.parts:
        cycles.append(list(range(start, start + part)))
        start += part
    return from_cycles(lam.n, [c for c in cycles if len(c) > 1])


def adjacent_word(sigma: Permutation) -> GeneratorWord:
    """Từ rút gọn bằng bubble sort trên dạng một dòng.

    Đổi chỗ vị trí i, i+1 của dạng một dòng là nhân phải với s_i, nên
    sigma * s_a1 * ... * s_ak = e và từ cần tìm là dãy đổi chỗ viết ngược lại.
    """
    a = list(sigma.images)
    swaps = []
    for end in range(len(a) - 1, 0, -1):
        for i in range(end):
            if a[i] > a[i + 1]:
                a[i], a[i + 1] = a[i + 1], a[i]
                swaps.append(i + 1)
    return GeneratorWord(sigma.n, tuple(reversed(swaps)))


def evaluate(word: GeneratorWord) -> Permutation:
    result = identity(word.n)
    for i in word.letters:
        result = compose(result, adjacent(word.n, i))
    return result
