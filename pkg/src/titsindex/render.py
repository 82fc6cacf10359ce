"""Text, SVG and TikZ pictures of Tits indexes.

Text grammar, one line per row of the picture:

* the main chain is written left to right, vertex ``o``, distinguished
  vertex ``(o)``; edges ``--``, ``=>=``/``=<=`` (the tip points toward the
  short root) and ``≡``;
* the extra vertex of E6/E7/E8 sits two lines above the chain, its ``o``
  in the same column as the ``o`` of the vertex it attaches to, with a ``|``
  line in between;
* the fork of D_n starts in the column just after the chain: ``/`` plus
  vertex n-1 on the line above, ``\\`` plus vertex n on the line below;
* when some orbit has two or more vertices a last line lists those orbits,
  ``orbits: {1,5}*{2,4}``, ``*`` marking distinguished ones.

Lines carry no trailing blanks and there is no final newline.
"""

from __future__ import annotations

from .tits_index import quasi_split_type_name

VERTEX = "o"
CIRCLED = "(o)"
TRIPLE = "≡"
TRIPLE_ASCII = "###"


def _token(index, v):
    return CIRCLED if v in index.distinguished_vertices else VERTEX


def _layout(diagram):
    """Main chain, extra vertex with its attachment, fork pair (each possibly None)."""
    n, kind = diagram.rank, diagram.type_label
    if kind == "D":
        return list(range(1, n - 1)), None, (n - 1, n)
    if kind == "E":
        branch = {6: 3, 7: 4, 8: 5}[n]
        return list(range(1, n)), (n, branch), None
    return list(range(1, n + 1)), None, None


def _edge_glyph(edge, left):
    if edge.multiplicity == 1:
        return "--"
    if edge.multiplicity == 3:
        return TRIPLE
    return "=<=" if edge.short == left else "=>="


def render_text(index, ascii_only=False):
    diagram = index.diagram
    chain, extra, fork = _layout(diagram)
    edges = {(e.i, e.j): e for e in diagram.edges}
    line, column = "", {}
    for k, v in enumerate(chain):
        if k:
            prev = chain[k - 1]
            line += _edge_glyph(edges[(min(prev, v), max(prev, v))], prev)
        tok = _token(index, v)
        column[v] = len(line) + tok.index(VERTEX)
        line += tok
    above, below = [], []
    if extra is not None:
        v, at = extra
        tok = _token(index, v)
        c = column[at]
        above = [" " * (c - tok.index(VERTEX)) + tok, " " * c + "|"]
    if fork is not None:
        pad = " " * len(line)
        above = [pad + "/" + _token(index, fork[0])]
        below = [pad + "\\" + _token(index, fork[1])]
    lines = above + [line] + below
    big = [o for o in index.orbits if len(o) > 1]
    if big:
        marks = set(index.distinguished)
        lines.append("orbits: " + "".join("{" + ",".join(map(str, o)) + "}" + ("*" if o in marks else "") for o in big))
    text = "\n".join(lines)
    return text.replace(TRIPLE, TRIPLE_ASCII) if ascii_only else text


# -- vector output -----------------------------------------------------------

UNIT = 20  # pixels per layout unit
MARGIN = 30


def positions(index):
    """Layout coordinates per vertex, in units; y grows downward.

    Trivial actions use the usual diagram geometry; nontrivial ones fold the
    diagram so that each orbit is stacked in one column.
    """
    diagram = index.diagram
    n, kind = diagram.rank, diagram.type_label
    if index.t > 1 and kind == "A":
        pos = {}
        for i in range(1, n + 1):
            j = n + 1 - i
            if i < j:
                pos[i] = (2 * (i - 1), -1)
            elif i > j:
                pos[i] = (2 * (j - 1), 1)
            else:
                pos[i] = (2 * (i - 1), 0)
        return pos
    if index.t > 1 and kind == "D" and n == 4 and index.t in (3, 6):
        return {2: (0, 0), 1: (2, -2), 3: (2, 0), 4: (2, 2)}
    if index.t > 1 and kind == "E":
        return {6: (0, 0), 3: (2, 0), 2: (4, -1), 4: (4, 1), 1: (6, -1), 5: (6, 1)}
    chain, extra, fork = _layout(diagram)
    pos = {v: (2 * k, 0) for k, v in enumerate(chain)}
    if extra is not None:
        v, at = extra
        pos[v] = (pos[at][0], -2)
    if fork is not None:
        x = pos[chain[-1]][0] + 2
        pos[fork[0]], pos[fork[1]] = (x, -1), (x, 1)
    return pos


def _px(pt):
    x, y = pt
    return MARGIN + UNIT * x, MARGIN + 2 * UNIT + UNIT * y


def _extent(pos):
    width = max(_px(p)[0] for p in pos.values()) + MARGIN
    return width, 4 * UNIT + 2 * MARGIN


def _ovals(index, pos):
    """(cx, cy, rx, ry) in pixels for each distinguished orbit."""
    out = []
    for orbit in index.distinguished:
        pts = [_px(pos[v]) for v in orbit]
        xs, ys = [p[0] for p in pts], [p[1] for p in pts]
        cx, cy = (min(xs) + max(xs)) / 2, (min(ys) + max(ys)) / 2
        rx, ry = (max(xs) - min(xs)) / 2 + 8, (max(ys) - min(ys)) / 2 + 8
        out.append((cx, cy, rx, ry))
    return out


def _fmt(x):
    return str(int(x)) if float(x).is_integer() else f"{x:.1f}"


def render_svg(index):
    """An SVG 1.1 document."""
    pos = positions(index)
    width, height = _extent(pos)
    title = f"{quasi_split_type_name(index.diagram, index.t)} Tits index"
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f"<title>{title}</title>",
        '<g stroke="black" fill="none">',
    ]
    for e in index.diagram.edges:
        (x1, y1), (x2, y2) = _px(pos[e.i]), _px(pos[e.j])
        offsets = {1: [0], 2: [-2, 2], 3: [-3, 0, 3]}[e.multiplicity]
        for d in offsets:
            dx, dy = (0, d) if y1 == y2 else (d, 0)
            out.append(f'<line x1="{_fmt(x1 + dx)}" y1="{_fmt(y1 + dy)}" x2="{_fmt(x2 + dx)}" y2="{_fmt(y2 + dy)}"/>')
        if e.multiplicity > 1:
            # chevron pointing toward the short root
            (sx, sy), (lx, ly) = (_px(pos[e.short]), _px(pos[e.i + e.j - e.short]))
            mx, my = (sx + lx) / 2, (sy + ly) / 2
            sign = 1 if sx > lx else -1
            out.append(f'<polyline points="{_fmt(mx - 4 * sign)},{_fmt(my - 5)} {_fmt(mx + 4 * sign)},{_fmt(my)} '
                       f'{_fmt(mx - 4 * sign)},{_fmt(my + 5)}"/>')
    for cx, cy, rx, ry in _ovals(index, pos):
        if rx == ry:
            out.append(f'<circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="{_fmt(rx)}"/>')
        else:
            out.append(f'<ellipse cx="{_fmt(cx)}" cy="{_fmt(cy)}" rx="{_fmt(rx)}" ry="{_fmt(ry)}"/>')
    out.append("</g>")
    out.append('<g fill="black" font-family="sans-serif" font-size="9">')
    for v in index.diagram.vertices:
        x, y = _px(pos[v])
        out.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="3"/>')
        out.append(f'<text x="{_fmt(x + 5)}" y="{_fmt(y + 14)}">{v}</text>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_tikz(index):
    """A ``tikzpicture`` environment; coordinates in layout units (y up)."""
    pos = positions(index)

    def c(v):
        x, y = pos[v]
        return f"({_fmt(x / 2)},{_fmt(-y / 2)})"

    out = ["\\begin{tikzpicture}"]
    for e in index.diagram.edges:
        style = {1: "", 2: "[double]", 3: "[double, thick]"}[e.multiplicity]
        out.append(f"\\draw{style} {c(e.i)} -- {c(e.j)};")
        if e.multiplicity > 1:
            out.append(f"% short root at vertex {e.short}")
    for orbit in index.distinguished:
        xs = [pos[v][0] / 2 for v in orbit]
        ys = [-pos[v][1] / 2 for v in orbit]
        cx, cy = (min(xs) + max(xs)) / 2, (min(ys) + max(ys)) / 2
        rx, ry = (max(xs) - min(xs)) / 2 + 0.2, (max(ys) - min(ys)) / 2 + 0.2
        if len(orbit) == 1:
            out.append(f"\\draw ({_fmt(cx)},{_fmt(cy)}) circle (0.2);")
        else:
            out.append(f"\\draw ({_fmt(cx)},{_fmt(cy)}) ellipse ({_fmt(rx)} and {_fmt(ry)});")
    for v in index.diagram.vertices:
        out.append(f"\\fill {c(v)} circle (0.06) node[below right] {{\\tiny {v}}};")
    out.append("\\end{tikzpicture}")
    return "\n".join(out) + "\n"
