"""
Certificates of disconnection
=============================

A bridge path between cut vertices of X that is at least as long as the
minimum degree of Y traps labels on one side. The engine confirms each
certificate; the last pair is disconnected even though no certificate exists.
"""

from fsgraphs.certificates import check_certificate, find_disconnect_certificate
from fsgraphs.engine import FsInstance, fs_components
from fsgraphs.families import cycle, path, spider, star
from fsgraphs.graph import complement

pairs = [
    ("spider(2,1,1,1)", spider((2, 1, 1, 1)), "comp(spider(3,1,1))", complement(spider((3, 1, 1)))),
    ("path(6)", path(6), "star(6)", star(6)),
    ("cycle(6)", cycle(6), "star(6)", star(6)),
    ("spider(2,2,1)", spider((2, 2, 1)), "comp(cycle(6))", complement(cycle(6))),
]

for xname, x, yname, y in pairs:
    cert = find_disconnect_certificate(FsInstance(x, y))
    summary = fs_components(FsInstance(x, y))
    if cert is None:
        verdict = "no certificate"
    else:
        verdict = f"certificate {cert.to_json()} valid={check_certificate(cert, x, y)}"
    print(f"X={xname} Y={yname}: {verdict}; engine sees {summary.num_components} component(s)")
