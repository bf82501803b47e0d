"""Compiling a banded unlink into a braided surface plan.

A banded braid is a plat presentation of an unlink plus surgery bands.
When the link is trivial before and after surgery, certificates (pairing
factorizations plus stabilization profiles) let the compiler build a
braided surface whose branch points and boundary are exact braid data.
The plan also renders as a motion picture in SVG.
"""

import tempfile
from pathlib import Path

from platkit.bands import (
    Band,
    BandedBraid,
    admissibility_report,
    band_surgery,
    compile_surface,
    realizing_euler_characteristic,
    search_certificates,
)
from platkit.motion import motion_svg, plan_motion
from platkit.words import BraidWord


def main() -> None:
    banded = BandedBraid(BraidWord.identity(4), (Band(2, 1, 0.5),))
    print("banded braid: trivial 2-pair plat, one positive band on slot 2")
    print(f"after surgery: {band_surgery(banded).text()!r}")

    report = admissibility_report(banded)
    print(f"admissible: {report.admissible} "
          f"({report.base_components} -> {report.surgered_components} components)")
    print(f"realizing euler characteristic: {realizing_euler_characteristic(banded)}")

    certs = search_certificates(banded, max_pairs=2)
    print(f"found certificates: profiles {certs.profile.text()!r} / "
          f"{certs.profile1.text()!r} / {certs.profile2.text()!r}")

    plan = compile_surface(banded, certs)
    print(f"plan: degree {plan.degree}, chi {plan.chi}, "
          f"{plan.positive_branch_points} positive and "
          f"{plan.negative_branch_points} negative branch points")
    print(f"boundary braid: {plan.boundary.text() or '(empty)'}")
    for strip in plan.strips:
        marks = ", ".join(f"{b.kind}@{b.slot}" for b in strip.bands) or "no bands"
        print(f"  {strip.name}: bottom [{strip.bottom.text()}] ({marks})")

    svg = motion_svg(plan_motion(plan))
    out = Path(tempfile.gettempdir()) / "band_plan_motion.svg"
    out.write_text(svg)
    print(f"motion picture written to {out} ({len(svg)} bytes)")


if __name__ == "__main__":
    main()
