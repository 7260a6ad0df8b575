"""ASCII and SVG drawings of paths, partitions, tableaux and bijection traces."""

from __future__ import annotations

from dataclasses import dataclass
from xml.sax.saxutils import escape

from .errors import ParseError
from .partitions import BoxSpec, Partition, boundary_path, durfee_side, hook_decomposition
from .paths import LatticePath, peak_set
from .perm_core import Permutation
from .tableaux import StandardTableau

OBJECTS = ("path", "partition", "tableau", "permutation-chain")
FORMATS = ("ascii", "svg")

_HOOK_MARKS = "123456789abcdefghijklmnopqrstuvwxyz"
_HOOK_FILLS = ["#f5e663", "#a9c4f5", "#9fe0a4", "#f5a3a3", "#d3a9f5", "#f5c99f"]
_UNIT = 20
_XML_HEAD = '<?xml version="1.0" encoding="UTF-8"?>\n'


@dataclass(frozen=True)
class RenderSpec:
    kind: str
    format: str = "ascii"
    peak_labels: bool = True
    hook_shading: bool = True
    box_outline: bool = True

    def __post_init__(self):
        if self.kind not in OBJECTS:
            raise ParseError(f"unknown object kind {self.kind!r}")
        if self.format not in FORMATS:
            raise ParseError(f"unknown format {self.format!r}")


def render(spec: RenderSpec, obj, box: BoxSpec | int | None = None) -> str:
    if box is not None and not isinstance(box, BoxSpec):
        box = BoxSpec(box)
    svg = spec.format == "svg"
    if spec.kind == "path":
        body = _path_svg(obj, spec) if svg else _path_ascii(obj, spec)
    elif spec.kind == "partition":
        if box is None:
            box = _smallest_box(obj)
        body = _partition_svg(obj, box, spec) if svg else _partition_ascii(obj, box, spec)
    elif spec.kind == "tableau":
        body = _tableau_svg(obj) if svg else _tableau_ascii(obj)
    else:
        body = _chain_svg(obj, spec) if svg else _chain_ascii(obj, spec)
    return body


def _smallest_box(lam: Partition) -> BoxSpec:
    # smallest n whose box holds lam: floor(n/2) >= rows, ceil(n/2) >= first part
    rows = len(lam)
    cols = lam.parts[0] if lam.parts else 0
    n = 0
    while n // 2 < rows or (n + 1) // 2 < cols:
        n += 1
    return BoxSpec(n)


# --- ascii -----------------------------------------------------------------


def _path_ascii(path: LatticePath, spec: RenderSpec) -> str:
    verts = path.vertices()
    W = max(x for x, _ in verts)
    H = max(y for _, y in verts)
    grid = [[" "] * (2 * W + 1) for _ in range(2 * H + 1)]
    for y in range(H + 1):
        for x in range(W + 1):
            grid[2 * (H - y)][2 * x] = "."
    peaks = peak_set(path)
    for i, (x, y) in enumerate(verts):
        grid[2 * (H - y)][2 * x] = "*" if i in peaks and spec.peak_labels else "o"
    for (x0, y0), (x1, y1) in zip(verts, verts[1:]):
        if y1 > y0:
            grid[2 * (H - y0) - 1][2 * x0] = "|"
        else:
            grid[2 * (H - y0)][2 * x0 + 1] = "-"
    lines = ["".join(row).rstrip() for row in grid]
    lines.append(f"path {path.steps or '(empty)'}")
    if spec.peak_labels:
        lines.append("peaks: " + (", ".join(map(str, sorted(peaks))) or "none"))
    return "\n".join(lines)


def _hook_index(r: int, c: int) -> int:
    """Peel order (0 = outermost hook) of the cell in row r, column c (0-based)."""
    return min(r, c)


def _partition_ascii(lam: Partition, box: BoxSpec, spec: RenderSpec) -> str:
    H, W = box.height, box.width
    k = durfee_side(lam)
    lines = []
    border = "+" + "-" * W + "+"
    if spec.box_outline:
        lines.append(border)
    for r in range(H):
        length = lam.parts[r] if r < len(lam) else 0
        cells = []
        for c in range(W):
            if c >= length:
                cells.append(".")
            elif spec.hook_shading and _hook_index(r, c) < k:
                cells.append(_HOOK_MARKS[_hook_index(r, c) % len(_HOOK_MARKS)])
            else:
                cells.append("#")
        row = "".join(cells)
        lines.append(f"|{row}|" if spec.box_outline else row)
    if spec.box_outline:
        lines.append(border)
    hd = sorted(hook_decomposition(lam))
    lines.append(f"partition ({lam}) in B_{box.n}, size {lam.size}")
    lines.append("hook decomposition: {" + ", ".join(map(str, hd)) + "}")
    lines.append(f"boundary path: {boundary_path(lam, box).steps}")
    return "\n".join(lines)


def _tableau_ascii(T: StandardTableau) -> str:
    width = len(str(T.size)) if T.size else 1
    lines = [" ".join(str(v).rjust(width) for v in row) for row in T.rows]
    lines.append(f"shape {T.shape}")
    return "\n".join(lines)


def _chain_ascii(trace, spec: RenderSpec) -> str:
    blocks = []
    for stage in trace:
        stat = "{" + ", ".join(map(str, sorted(stage.stat_value))) + "}"
        blocks.append(f"[{stage.name}] {stage.value}    {stage.statistic} = {stat}")
        if isinstance(stage.value, LatticePath):
            blocks.append(_path_ascii(stage.value, spec))
        elif isinstance(stage.value, Partition):
            n = len(trace[1].value) if len(trace) > 1 and isinstance(trace[1].value, LatticePath) else None
            box = BoxSpec(n) if n is not None else _smallest_box(stage.value)
            blocks.append(_partition_ascii(stage.value, box, spec))
    return "\n".join(blocks)


# --- svg -------------------------------------------------------------------


def _svg(width: int, height: int, body: list[str]) -> str:
    head = (f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
            f'viewBox="0 0 {width} {height}">')
    return _XML_HEAD + "\n".join([head, *body, "</svg>"]) + "\n"


def _path_elements(path: LatticePath, spec: RenderSpec, ox: int, oy: int) -> tuple[list[str], int, int]:
    verts = path.vertices()
    W = max(x for x, _ in verts)
    H = max(y for _, y in verts)
    pad = _UNIT
    px = lambda x: ox + pad + x * _UNIT  # noqa: E731
    py = lambda y: oy + pad + (H - y) * _UNIT  # noqa: E731
    out = []
    for x in range(W + 1):
        out.append(f'<line x1="{px(x)}" y1="{py(0)}" x2="{px(x)}" y2="{py(H)}" stroke="#ddd"/>')
    for y in range(H + 1):
        out.append(f'<line x1="{px(0)}" y1="{py(y)}" x2="{px(W)}" y2="{py(y)}" stroke="#ddd"/>')
    pts = " ".join(f"{px(x)},{py(y)}" for x, y in verts)
    out.append(f'<polyline points="{pts}" fill="none" stroke="#1f4fbf" stroke-width="3"/>')
    if spec.peak_labels:
        for i in sorted(peak_set(path)):
            x, y = verts[i]
            out.append(f'<circle cx="{px(x)}" cy="{py(y)}" r="4" fill="#c00"/>')
            out.append(f'<text x="{px(x) - 14}" y="{py(y) - 4}" font-size="12">{i}</text>')
    return out, 2 * pad + W * _UNIT, 2 * pad + H * _UNIT


def _path_svg(path: LatticePath, spec: RenderSpec) -> str:
    body, w, h = _path_elements(path, spec, 0, 0)
    return _svg(w, h, body)


def _partition_elements(lam: Partition, box: BoxSpec, spec: RenderSpec, ox: int, oy: int):
    H, W = box.height, box.width
    pad = _UNIT
    k = durfee_side(lam)
    out = []
    for r, length in enumerate(lam.parts):
        for c in range(length):
            idx = _hook_index(r, c)
            fill = _HOOK_FILLS[idx % len(_HOOK_FILLS)] if spec.hook_shading and idx < k else "#eee"
            out.append(f'<rect x="{ox + pad + c * _UNIT}" y="{oy + pad + r * _UNIT}" width="{_UNIT}" '
                       f'height="{_UNIT}" fill="{fill}" stroke="#333"/>')
    if spec.box_outline:
        out.append(f'<rect x="{ox + pad}" y="{oy + pad}" width="{W * _UNIT}" height="{H * _UNIT}" '
                   f'fill="none" stroke="#999"/>')
    verts = boundary_path(lam, box).vertices()
    pts = " ".join(f"{ox + pad + x * _UNIT},{oy + pad + (H - y) * _UNIT}" for x, y in verts)
    out.append(f'<polyline points="{pts}" fill="none" stroke="#1f4fbf" stroke-width="3"/>')
    hd = ", ".join(map(str, hook_decomposition(lam)))
    out.append(f'<text x="{ox + pad}" y="{oy + 2 * pad + H * _UNIT - 4}" font-size="12">'
               f'{escape(f"hd = {{{hd}}}")}</text>')
    return out, 2 * pad + W * _UNIT, 2 * pad + H * _UNIT + _UNIT


def _partition_svg(lam: Partition, box: BoxSpec, spec: RenderSpec) -> str:
    body, w, h = _partition_elements(lam, box, spec, 0, 0)
    return _svg(w, h, body)


def _tableau_elements(T: StandardTableau, ox: int, oy: int):
    pad = _UNIT
    out = []
    for r, row in enumerate(T.rows):
        for c, v in enumerate(row):
            x, y = ox + pad + c * _UNIT, oy + pad + r * _UNIT
            out.append(f'<rect x="{x}" y="{y}" width="{_UNIT}" height="{_UNIT}" fill="white" stroke="#333"/>')
            out.append(f'<text x="{x + 3}" y="{y + 14}" font-size="11">{v}</text>')
    cols = T.shape[0] if T.rows else 0
    return out, 2 * pad + cols * _UNIT, 2 * pad + len(T.rows) * _UNIT


def _tableau_svg(T: StandardTableau) -> str:
    body, w, h = _tableau_elements(T, 0, 0)
    return _svg(w, h, body)


def _chain_svg(trace, spec: RenderSpec) -> str:
    body = []
    y = 0
    width = 200
    for stage in trace:
        stat = ", ".join(map(str, sorted(stage.stat_value)))
        label = f"{stage.name}: {stage.value}   {stage.statistic} = {{{stat}}}"
        body.append(f'<text x="{_UNIT}" y="{y + _UNIT}" font-size="13">{escape(label)}</text>')
        y += _UNIT
        if isinstance(stage.value, LatticePath):
            els, w, h = _path_elements(stage.value, spec, 0, y)
        elif isinstance(stage.value, Partition):
            n = len(trace[1].value) if len(trace) > 1 and isinstance(trace[1].value, LatticePath) else None
            box = BoxSpec(n) if n is not None else _smallest_box(stage.value)
            els, w, h = _partition_elements(stage.value, box, spec, 0, y)
        elif isinstance(stage.value, Permutation):
            els, w, h = [], 0, _UNIT // 2
        else:
            els, w, h = [], 0, 0
        body += els
        width = max(width, w, 10 * len(label))
        y += h
    return _svg(width, y + _UNIT, body)
