"""
Drawing indexes
===============

Text for terminals, SVG for documents, TikZ for papers.  The SVG and TikZ
files go to ``pictures/`` under the current directory.
"""

from pathlib import Path

from titsindex import enumerate_indexes, render_svg, render_text, render_tikz

out = Path("pictures")
out.mkdir(exist_ok=True)

for ix in enumerate_indexes("2E6", p=2):
    print(ix)
    print(render_text(ix))
    print()

qs = enumerate_indexes("2E6", p=2)[0]
(out / "2E6_quasi_split.svg").write_text(render_svg(qs), encoding="utf-8")
(out / "2E6_quasi_split.tex").write_text(render_tikz(qs), encoding="utf-8")
print("wrote", sorted(p.name for p in out.iterdir()))
