# render.py
"""
Render - Xuất text, JSON và LaTeX cho ma trận, khai triển, tableau,
bảng đặc trưng, danh sách lớp và từ chuyển vị kề
"""

import enum
import json

from .errors import ParseError


class OutputFormat(enum.Enum):
    """Định dạng xuất: text | json | latex"""
    TEXT = "text"
    JSON = "json"
    LATEX = "latex"

    @classmethod
    def parse(cls, text: str) -> "OutputFormat":
        try:
            return cls(text.strip().lower())
        except ValueError:
            raise ParseError(f"unknown output format {text!r}: expected text, json or latex")


def dumps(payload: dict) -> str:
    """Một tài liệu JSON; thứ tự khóa giữ nguyên như payload"""
    return json.dumps(payload, separators=(", ", ": "))


# =========================================
# MATRICES
# =========================================

def matrix_text(rows: list) -> str:
    """Ma trận dạng text, các cột căn phải"""
    width = max((len(str(v)) for row in rows for v in row), default=1)
    return "\n".join("[ " + " ".join(str(v).rjust(width) for v in row) + " ]" for row in rows)


def matrix_latex(rows: list) -> str:
    body = " \\\\\n".join("  " + " & ".join(str(v) for v in row) for row in rows)
    return "\\begin{bmatrix}\n" + body + "\n\\end{bmatrix}"


def matrix_payload(shape, perm: str, order: str, basis: list, rows: list) -> dict:
    """Payload JSON của lệnh matrix"""
    return {
        "shape": list(shape.parts),
        "perm": perm,
        "order": order,
        "basis": [str(t) for t in basis],
        "matrix": rows,
    }


def matrix_json(payload: dict) -> str:
    return dumps({key: payload[key] for key in ("shape", "perm", "order", "basis", "matrix")})


# =========================================
# TABLEAUX
# =========================================

def tableau_latex(t) -> str:
    """Mỗi hàng của tableau là một dòng, phần tử trong ngoặc nhọn"""
    return " \\\\\n".join("".join("{" + str(v) + "}" for v in row) for row in t.rows)


def basis_text(basis: list) -> str:
    return "\n".join(f"t{k} = {t}" for k, t in enumerate(basis, start=1))


def basis_latex(basis: list) -> str:
    return "\n".join(f"% t{k} = {t}\n" + tableau_latex(t) for k, t in enumerate(basis, start=1))


# =========================================
# STRAIGHTENING
# =========================================

def expansion_latex(expansion) -> str:
    if not expansion.coeffs:
        return "0"
    parts = []
    for k, v in expansion.coeffs.items():
        sign = "+" if v > 0 else "-"
        mag = "" if abs(v) == 1 else str(abs(v))
        parts.append(f"{sign} {mag}e_{{t_{{{k + 1}}}}}")
    text = " ".join(parts)
    return text[2:] if text.startswith("+ ") else text


def step_text(step) -> str:
    """Mô tả một bước Garnir"""
    a = ",".join(str(x) for x in sorted(step.pair.A))
    b = ",".join(str(x) for x in sorted(step.pair.B))
    head = (f"garnir at {step.tableau} (column sign {step.sign:+d}), "
            f"descent ({step.descent.row},{step.descent.col}): A={{{a}}} B={{{b}}}")
    lines = [head]
    for s, pi, moved in step.terms:
        lines.append(f"  {'+' if s > 0 else '-'}{pi} -> {moved}")
    return "\n".join(lines)


def step_payload(step) -> dict:
    return {
        "tableau": str(step.tableau),
        "sign": step.sign,
        "descent": [step.descent.row, step.descent.col],
        "A": sorted(step.pair.A),
        "B": sorted(step.pair.B),
        "terms": [{"sign": s, "perm": str(pi), "tableau": str(moved)} for s, pi, moved in step.terms],
    }


# =========================================
# CHARACTER TABLES / CLASSES
# =========================================

def chartable_text(shapes: list, classes: list, sizes: list, table: list, labels: dict) -> str:
    """Bảng đặc trưng dạng text, dòng đầu là kích thước lớp"""
    row_heads = [str(lam) + (f" {labels[lam]}" if lam in labels else "") for lam in shapes]
    col_heads = ["K(" + str(c) + ")" for c in classes]
    first = max([len(h) for h in row_heads] + [len("size")])
    widths = [max(len(h), max(len(str(row[j])) for row in table), len(str(sizes[j])))
              for j, h in enumerate(col_heads)]

    def line(head, cells):
        return head.ljust(first) + " | " + "  ".join(str(c).rjust(w) for c, w in zip(cells, widths))

    out = [line("", col_heads), line("size", sizes), "-" * len(line("", col_heads))]
    out += [line(h, row) for h, row in zip(row_heads, table)]
    return "\n".join(out)


def chartable_latex(shapes: list, classes: list, sizes: list, table: list, labels: dict) -> str:
    spec = "r|" + "c" * len(classes)
    lines = ["\\begin{tabular}{" + spec + "}"]
    lines.append(" & ".join([""] + [f"K_{{({c})}}" for c in classes]) + " \\\\")
    lines.append(" & ".join(["|K|"] + [str(s) for s in sizes]) + " \\\\")
    lines.append("\\hline\\hline")
    for lam, row in zip(shapes, table):
        head = f"({lam})" + (f" {labels[lam]}" if lam in labels else "")
        lines.append(" & ".join([head] + [str(v) for v in row]) + " \\\\")
    lines.append("\\end{tabular}")
    return "\n".join(lines)


def classes_text(classes: dict) -> str:
    out = []
    for lam, members in classes.items():
        out.append(f"K({lam}) |K|={len(members)}: " + ", ".join(str(s) for s in members))
    return "\n".join(out)


def classes_latex(classes: dict) -> str:
    lines = ["\\begin{align*}"]
    rows = []
    for lam, members in classes.items():
        elems = ",".join("\\epsilon" if s.is_identity() else str(s).replace(" ", "\\,") for s in members)
        rows.append(f"  K_{{({lam})}} &= \\{{ {elems} \\}} && |K_{{({lam})}}| = {len(members)}")
    lines.append(" \\\\\n".join(rows))
    lines.append("\\end{align*}")
    return "\n".join(lines)


def word_latex(word) -> str:
    return "".join(f"({i}\\,{i + 1})" for i in word.letters) or "\\epsilon"
