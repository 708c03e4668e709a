# cli.py
"""
CLI - Giao diện dòng lệnh: ma trận biểu diễn, vết straightening, bảng đặc trưng,
từ chuyển vị kề, cơ sở chuẩn, lớp liên hợp và bộ kiểm tra
"""

import argparse
import logging
import math
import re
import sys

from .characters import character_table, row_labels
from .config import (
    DEFAULT_FORMAT, DEFAULT_ORDER, EXIT_LIMIT, EXIT_OK, EXIT_PARSE_ERROR,
    EXIT_VERIFY_FAILED, PAPER_DEGREE,
)
from .errors import CellOutsideDiagramError, DegreeMismatchError, LimitError, ParseError, UnsupportedOrderError
from .perm import adjacent_word, check_enumerable, class_size, conjugacy_classes, parse_permutation, sign
from .render import (
    OutputFormat, basis_latex, basis_text, chartable_latex, chartable_text, classes_latex,
    classes_text, dumps, expansion_latex, matrix_json, matrix_latex, matrix_payload,
    matrix_text, step_payload, step_text, word_latex,
)
from .shapes import Partition, dimension, hook_lengths, parse_partition, partitions_of
from .specht import rep_matrix, straighten
from .tableaux import BasisOrder, parse_tableau, standard_tableaux
from .utils import matrix_to_lists, setup_logging
from .verify import run_suite

logger = logging.getLogger(__name__)

_ENTRY_RE = re.compile(r"\d+")


def _out(text: str):
    print(text)


def _check_order(order: BasisOrder, n: int):
    """Thứ tự "paper" chỉ hợp lệ khi n = 4"""
    if order is BasisOrder.PAPER_S4 and n != PAPER_DEGREE:
        raise UnsupportedOrderError(f"--order paper is only valid for n={PAPER_DEGREE}, got n={n}")


def _resolve_n(shape: Partition, n):
    if n is None:
        return shape.n
    if n != shape.n:
        raise ParseError(f"--n {n} does not match shape {shape} of size {shape.n}")
    return n


def _infer_degree(perm_text: str) -> int:
    """Suy ra bậc từ phần tử lớn nhất trong chuỗi hoán vị"""
    text = perm_text.strip()
    if text.startswith("["):
        return len(_ENTRY_RE.findall(text))
    entries = [int(x) for x in _ENTRY_RE.findall(text)]
    return max(entries, default=1)


# =========================================
# COMMANDS
# =========================================

def cmd_matrix(shape: Partition, perm: str, order: BasisOrder, fmt: OutputFormat) -> int:
    """In X(sigma) kèm cơ sở chuẩn"""
    _check_order(order, shape.n)
    sigma = parse_permutation(perm, shape.n)
    basis = standard_tableaux(shape, order)
    rows = matrix_to_lists(rep_matrix(shape, sigma, order))

    if fmt is OutputFormat.JSON:
        _out(matrix_json(matrix_payload(shape, str(sigma), order.value, basis, rows)))
    elif fmt is OutputFormat.LATEX:
        _out(f"% X_{{({shape})}}({sigma}), basis: " + ", ".join(str(t) for t in basis))
        _out(matrix_latex(rows))
    else:
        _out(f"X_({shape})({sigma})  order={order.value}")
        _out(basis_text(basis))
        _out(matrix_text(rows))
    return EXIT_OK


def cmd_straighten(shape: Partition, tableau: str, order: BasisOrder, fmt: OutputFormat) -> int:
    """In từng bước Garnir và khai triển cuối cùng"""
    _check_order(order, shape.n)
    t = parse_tableau(tableau, shape)
    steps = []
    expansion = straighten(t, order, trace=steps.append)
    basis = standard_tableaux(shape, order)

    if fmt is OutputFormat.JSON:
        _out(dumps({
            "shape": list(shape.parts),
            "tableau": str(t),
            "order": order.value,
            "basis": [str(b) for b in basis],
            "expansion": expansion.vector(),
            "steps": [step_payload(s) for s in steps],
        }))
    elif fmt is OutputFormat.LATEX:
        _out(f"% e_{{{t}}}")
        _out(expansion_latex(expansion))
    else:
        _out(basis_text(basis))
        for step in steps:
            _out(step_text(step))
        _out(f"e[{t}] = {expansion}")
    return EXIT_OK


def cmd_chartable(n: int, fmt: OutputFormat) -> int:
    """In bảng đặc trưng của S_n"""
    check_enumerable(n)
    shapes = partitions_of(n)
    sizes = [class_size(c) for c in shapes]
    table = character_table(n)
    labels = row_labels(n)

    if fmt is OutputFormat.JSON:
        _out(dumps({
            "n": n,
            "classes": [list(c.parts) for c in shapes],
            "sizes": sizes,
            "shapes": [list(s.parts) for s in shapes],
            "labels": {str(k): v for k, v in labels.items()},
            "table": table,
        }))
    elif fmt is OutputFormat.LATEX:
        _out(chartable_latex(shapes, shapes, sizes, table, labels))
    else:
        _out(chartable_text(shapes, shapes, sizes, table, labels))
    return EXIT_OK


def cmd_decompose(n: int, perm: str, fmt: OutputFormat = OutputFormat.TEXT) -> int:
    """In từ chuyển vị kề, độ dài và dấu của hoán vị"""
    sigma = parse_permutation(perm, n)
    word = adjacent_word(sigma)
    if word.evaluate() != sigma:
        raise AssertionError(f"bubble-sort word {word} does not evaluate to {sigma}")

    if fmt is OutputFormat.JSON:
        _out(dumps({
            "perm": str(sigma),
            "word": list(word.letters),
            "cycles": str(word),
            "length": len(word),
            "sign": sign(sigma),
        }))
    elif fmt is OutputFormat.LATEX:
        _out(word_latex(word))
    else:
        _out(str(word))
        _out(f"length {len(word)}")
        _out(f"sign {sign(sigma):+d}")
    return EXIT_OK


def cmd_verify(n: int, with_oracle: bool, fmt: OutputFormat = OutputFormat.TEXT) -> int:
    """Chạy bộ kiểm tra; trả về 1 nếu có bài thất bại"""
    log = None if fmt is OutputFormat.JSON else _out
    results = run_suite(n, with_oracle, log_callback=log)
    passed = all(r.passed for r in results)

    if fmt is OutputFormat.JSON:
        _out(dumps({
            "n": n,
            "oracle": with_oracle,
            "passed": passed,
            "checks": [{"name": r.name, "passed": r.passed, "detail": r.detail} for r in results],
        }))
    else:
        _out(f"{sum(r.passed for r in results)}/{len(results)} checks passed")
    return EXIT_OK if passed else EXIT_VERIFY_FAILED


def cmd_basis(shape: Partition, order: BasisOrder, fmt: OutputFormat) -> int:
    """In cơ sở chuẩn, bảng móc và số chiều"""
    _check_order(order, shape.n)
    hooks = hook_lengths(shape)
    basis = standard_tableaux(shape, order)
    flat = [h for row in hooks for h in row]
    f = dimension(shape)

    if fmt is OutputFormat.JSON:
        _out(dumps({
            "shape": list(shape.parts),
            "order": order.value,
            "hooks": hooks,
            "dimension": f,
            "basis": [str(t) for t in basis],
        }))
    elif fmt is OutputFormat.LATEX:
        product = "\\cdot ".join(str(h) for h in flat)
        _out(f"f^{{({shape})}} = \\frac{{{math.factorial(shape.n)}}}{{{product}}} = {f}")
        _out(basis_latex(basis))
    else:
        _out("hooks: " + " / ".join(" ".join(str(h) for h in row) for row in hooks))
        _out(f"f = {shape.n}!/({'*'.join(str(h) for h in flat)}) = {f}")
        _out(basis_text(basis))
    return EXIT_OK


def cmd_classes(n: int, fmt: OutputFormat) -> int:
    """In các lớp liên hợp và kích thước"""
    classes = conjugacy_classes(n)
    if fmt is OutputFormat.JSON:
        _out(dumps({
            "n": n,
            "classes": [
                {"type": list(lam.parts), "size": len(members), "members": [str(s) for s in members]}
                for lam, members in classes.items()
            ],
        }))
    elif fmt is OutputFormat.LATEX:
        _out(classes_latex(classes))
    else:
        _out(classes_text(classes))
    return EXIT_OK


# =========================================
# ARGUMENT PARSING
# =========================================

def build_parser() -> argparse.ArgumentParser:
    """Tạo parser cho các lệnh con"""
    parser = argparse.ArgumentParser(
        prog="youngrep",
        description="Young's natural representations of S_n by Garnir straightening",
    )
    parser.add_argument("-v", "--verbose", action="count", default=0, help="diagnostics on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", default=DEFAULT_FORMAT, help="text | json | latex")

    def add_order(p):
        p.add_argument("--order", default=DEFAULT_ORDER, help="paper | rowlex (paper only for n=4)")

    p = sub.add_parser("matrix", help="representation matrix X_shape(perm)")
    p.add_argument("--shape", required=True)
    p.add_argument("--perm", default="e")
    p.add_argument("--n", type=int)
    add_order(p)
    add_format(p)

    p = sub.add_parser("straighten", help="expand a polytabloid in the standard basis")
    p.add_argument("--shape")
    p.add_argument("--tableau", required=True)
    p.add_argument("--n", type=int)
    add_order(p)
    add_format(p)

    p = sub.add_parser("chartable", help="character table of S_n")
    p.add_argument("--n", type=int, required=True)
    add_format(p)

    p = sub.add_parser("decompose", help="adjacent-transposition word of a permutation")
    p.add_argument("--perm", required=True)
    p.add_argument("--n", type=int)
    add_format(p)

    p = sub.add_parser("verify", help="run the verification suite")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--oracle", action="store_true", help="include brute-force oracle checks")
    add_format(p)

    p = sub.add_parser("basis", help="hook lengths and ordered standard tableaux")
    p.add_argument("--shape", required=True)
    p.add_argument("--n", type=int)
    add_order(p)
    add_format(p)

    p = sub.add_parser("classes", help="conjugacy classes of S_n")
    p.add_argument("--n", type=int, required=True)
    add_format(p)
    return parser


def _dispatch(args) -> int:
    fmt = OutputFormat.parse(args.format)
    logger.info("command %s, format %s", args.command, fmt.value)

    if args.command == "matrix":
        shape = parse_partition(args.shape)
        _resolve_n(shape, args.n)
        return cmd_matrix(shape, args.perm, BasisOrder.parse(args.order), fmt)

    if args.command == "straighten":
        t = parse_tableau(args.tableau)
        shape = parse_partition(args.shape) if args.shape else t.shape
        _resolve_n(shape, args.n)
        return cmd_straighten(shape, args.tableau, BasisOrder.parse(args.order), fmt)

    if args.command == "chartable":
        return cmd_chartable(args.n, fmt)

    if args.command == "decompose":
        n = args.n if args.n is not None else _infer_degree(args.perm)
        return cmd_decompose(n, args.perm, fmt)

    if args.command == "verify":
        return cmd_verify(args.n, args.oracle, fmt)

    if args.command == "basis":
        shape = parse_partition(args.shape)
        _resolve_n(shape, args.n)
        return cmd_basis(shape, BasisOrder.parse(args.order), fmt)

    if args.command == "classes":
        return cmd_classes(args.n, fmt)

    raise ParseError(f"unknown command {args.command!r}")


def main(argv=None) -> int:
    """Điểm vào CLI
    Returns: exit code (0 OK, 1 kiểm tra thất bại, 2 lỗi đầu vào, 3 vượt giới hạn)
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse exits 2 on usage errors, 0 on --help
        return e.code if isinstance(e.code, int) else EXIT_PARSE_ERROR
    setup_logging(args.verbose)

    try:
        return _dispatch(args)
    except (ParseError, DegreeMismatchError, CellOutsideDiagramError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE_ERROR
    except LimitError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_LIMIT
    except ValueError as e:
        # n < 1 and similar out-of-domain arguments
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE_ERROR
