"""Certification engine: runs registered property checkers over a universe
and emits deterministic machine-readable reports with re-checkable witnesses.

Each checker pairs an instance enumerator with a pure per-instance predicate.
The enumerator yields ("inst", parts) for instances satisfying the property's
hypotheses and ("filtered", parts) for enumerated instances that fail them,
so vacuous verification stays visible in the counts.  Bound errors raised by
the predicate mark the instance skipped, never verified.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field

from .congruence import Congruence, parse_partition
from .core import ActHom, FiniteAct, FiniteMonoid, Subact, validate_act, validate_monoid
from .errors import (
    BoundExceeded,
    NotInUniverse,
    PostconditionError,
    SizeBound,
    UnknownTheorem,
)
from .injectivity import DirectedChain
from .radical import Radical, RadicalTaxonomy, classify_radical

SCHEMA = "radact-report/1"


@dataclass
class TheoremReport:
    theorem_id: str
    description: str
    status: str  # verified | violated | skipped-out-of-bounds
    instances_checked: int
    hypothesis_filtered: int
    instances_skipped: int
    witness: dict | None
    duration_ms: float = field(default=0.0, compare=False)

    def payload(self) -> dict:
        out = {
            "theorem_id": self.theorem_id,
            "description": self.description,
            "status": self.status,
            "instances_checked": self.instances_checked,
            "hypothesis_filtered": self.hypothesis_filtered,
            "instances_skipped": self.instances_skipped,
        }
        if self.witness is not None:
            out["witness"] = self.witness
        return out


class Checker:
    def __init__(self, cid, description, enumerate_fn, holds_fn):
        self.id = cid
        self.description = description
        self.enumerate = enumerate_fn
        self.holds = holds_fn

    def run(self, universe) -> TheoremReport:
        t0 = time.perf_counter()
        checked = filtered = skipped = 0
        witness = None
        status = None
        for kind, parts in self.enumerate(universe):
            if kind == "filtered":
                filtered += 1
                continue
            if kind == "skip":
                skipped += 1
                continue
            try:
                ok = self.holds(universe, parts)
            except (SizeBound, BoundExceeded, NotInUniverse):
                skipped += 1
                continue
            except PostconditionError as err:
                witness = {"instance": encode_parts(parts), "note": str(err)}
                status = "violated"
                break
            checked += 1
            if not ok:
                witness = {"instance": encode_parts(parts)}
                status = "violated"
                break
        if status is None:
            if checked == 0 and skipped > 0:
                status = "skipped-out-of-bounds"
            else:
                status = "verified"
        return TheoremReport(
            self.id,
            self.description,
            status,
            checked,
            filtered,
            skipped,
            witness,
            duration_ms=(time.perf_counter() - t0) * 1000.0,
        )

    def recheck(self, universe, witness) -> bool:
        """Re-run the predicate on a decoded witness; True means the witness
        still violates the property."""
        parts = decode_parts(universe, witness["instance"])
        try:
            return not self.holds(universe, parts)
        except PostconditionError:
            return True


THEOREMS: dict[str, Checker] = {}
AXIOMS: dict[str, Checker] = {}


def register(cid, description, enumerate_fn, holds_fn, axiom=False):
    table = AXIOMS if axiom else THEOREMS
    if cid in table:
        raise ValueError(f"duplicate checker id {cid}")
    table[cid] = Checker(cid, description, enumerate_fn, holds_fn)


# ---------------------------------------------------------------------------
# witness encoding


def encode_part(obj):
    if isinstance(obj, Radical):
        return {"radical": obj.name}
    if isinstance(obj, FiniteMonoid):
        return {
            "monoid": {
                "name": obj.name,
                "identity": obj.identity,
                "table": [list(row) for row in obj.mul],
            }
        }
    if isinstance(obj, FiniteAct):
        return {
            "act": {
                "name": obj.name,
                "monoid": encode_part(obj.monoid)["monoid"],
                "action": [list(row) for row in obj.action],
            }
        }
    if isinstance(obj, Congruence):
        return {
            "congruence": {
                "act": encode_part(obj.act)["act"],
                "partition": str(obj),
            }
        }
    if isinstance(obj, ActHom):
        return {
            "hom": {
                "source": encode_part(obj.source)["act"],
                "target": encode_part(obj.target)["act"],
                "map": list(obj.map),
            }
        }
    if isinstance(obj, Subact):
        return {
            "subact": {
                "act": encode_part(obj.parent)["act"],
                "members": list(obj.members),
            }
        }
    if isinstance(obj, DirectedChain):
        return {
            "chain": {
                "acts": [encode_part(a)["act"] for a in obj.acts],
                "maps": [list(h.map) for h in obj.links],
            }
        }
    if isinstance(obj, bool):
        return {"bool": obj}
    if isinstance(obj, int):
        return {"int": obj}
    if isinstance(obj, str):
        return {"str": obj}
    raise TypeError(f"cannot encode {obj!r} into a witness")


def encode_parts(parts) -> list:
    return [encode_part(p) for p in parts]


def _decode_monoid(data) -> FiniteMonoid:
    return validate_monoid(data["table"], data["identity"], data.get("name", ""))


def _decode_act(data) -> FiniteAct:
    return validate_act(_decode_monoid(data["monoid"]), data["action"],
                        data.get("name", ""))


def decode_part(universe, data):
    (tag, payload), = data.items()
    if tag == "radical":
        return universe.radical(payload)
    if tag == "monoid":
        return _decode_monoid(payload)
    if tag == "act":
        return _decode_act(payload)
    if tag == "congruence":
        act = _decode_act(payload["act"])
        return parse_partition(act, payload["partition"])
    if tag == "hom":
        src = _decode_act(payload["source"])
        tgt = _decode_act(payload["target"])
        return ActHom(src, tgt, tuple(payload["map"]))
    if tag == "subact":
        act = _decode_act(payload["act"])
        return Subact(act, tuple(payload["members"]))
    if tag == "chain":
        acts = tuple(_decode_act(a) for a in payload["acts"])
        links = tuple(
            ActHom(acts[i], acts[i + 1], tuple(m))
            for i, m in enumerate(payload["maps"])
        )
        return DirectedChain(acts, links)
    if tag in ("int", "str", "bool"):
        return payload
    raise ValueError(f"unknown witness component {tag!r}")


def decode_parts(universe, data) -> tuple:
    return tuple(decode_part(universe, p) for p in data)


# ---------------------------------------------------------------------------
# running


def _ensure_registered():
    if not THEOREMS:
        from . import checkers  # noqa: F401  (registers on import)


def registered_ids() -> list[str]:
    _ensure_registered()
    return list(AXIOMS) + list(THEOREMS)


def verify(theorem_id: str, universe) -> TheoremReport:
    _ensure_registered()
    table = THEOREMS if theorem_id in THEOREMS else AXIOMS
    if theorem_id not in table:
        raise UnknownTheorem(theorem_id)
    return table[theorem_id].run(universe)


def recheck_witness(theorem_id: str, universe, witness) -> bool:
    _ensure_registered()
    table = THEOREMS if theorem_id in THEOREMS else AXIOMS
    if theorem_id not in table:
        raise UnknownTheorem(theorem_id)
    return table[theorem_id].recheck(universe, witness)


def taxonomy_section(universe) -> dict:
    flags = {
        r.name: classify_radical(r, universe).flags() for r in universe.radicals
    }
    names = RadicalTaxonomy.FLAG_NAMES
    implications = []
    for src in names:
        for dst in names:
            if src == dst:
                continue
            holds = all(
                (not f[src]) or f[dst] for f in flags.values()
            )
            implications.append([src, dst, holds])
    expected = [
        ("hereditary", "pre_hereditary"),
        ("pre_hereditary", "zero_hereditary"),
        ("zero_hereditary", "weakly_hereditary"),
        ("kurosh_amitsur", "pre_kurosh"),
        ("pre_kurosh", "weakly_hereditary"),
    ]
    broken = [
        [s, d] for s, d in expected
        if not all((not f[s]) or f[d] for f in flags.values())
    ]
    return {
        "flags": flags,
        "implications": implications,
        "expected_edges_broken": broken,
    }


def verify_all(universe) -> dict:
    """Run every registered axiom and theorem checker; deterministic apart
    from the trailing generated_at / timings block."""
    _ensure_registered()
    axiom_reports = [AXIOMS[k].run(universe) for k in AXIOMS]
    theorem_reports = [THEOREMS[k].run(universe) for k in THEOREMS]
    everything = axiom_reports + theorem_reports
    summary = {
        "verified": sum(1 for r in everything if r.status == "verified"),
        "violated": sum(1 for r in everything if r.status == "violated"),
        "skipped_out_of_bounds": sum(
            1 for r in everything if r.status == "skipped-out-of-bounds"
        ),
    }
    doc = {
        "schema": SCHEMA,
        "bounds": {
            "monoid_max": universe.monoid_max,
            "act_max": universe.act_max,
            "hull_bound": universe.hull_bound,
            "con_bound": universe.con_bound,
        },
        "radicals": [r.name for r in universe.radicals],
        "axioms": [r.payload() for r in axiom_reports],
        "results": [r.payload() for r in theorem_reports],
        "taxonomy": taxonomy_section(universe),
        "summary": summary,
        "generated_at": _timestamp(),
        "timings_ms": {
            r.theorem_id: round(r.duration_ms, 3) for r in everything
        },
    }
    return doc


def _timestamp() -> str:
    from datetime import datetime, timezone

    return datetime.now(timezone.utc).isoformat()


def exit_code(doc: dict) -> int:
    return 1 if doc["summary"]["violated"] else 0


# ---------------------------------------------------------------------------
# serialization


def to_json(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


def to_text(doc: dict) -> str:
    lines = []
    bounds = doc["bounds"]
    lines.append("# verification report")
    lines.append(
        "# bounds: "
        + " ".join(f"{k}={v}" for k, v in bounds.items())
    )
    lines.append("# radicals: " + " ".join(doc["radicals"]))
    for section, key in (("axioms", "axioms"), ("theorems", "results")):
        lines.append(f"# {section}")
        for rep in doc[key]:
            lines.append(
                f"{rep['theorem_id']:<10} {rep['status']:<22}"
                f" checked={rep['instances_checked']}"
                f" filtered={rep['hypothesis_filtered']}"
                f" skipped={rep['instances_skipped']}"
            )
            if "witness" in rep:
                lines.append("    witness: " + json.dumps(rep["witness"]))
    lines.append("# taxonomy")
    for name, flags in doc["taxonomy"]["flags"].items():
        flagtext = " ".join(f"{k}={'y' if v else 'n'}" for k, v in flags.items())
        lines.append(f"{name}: {flagtext}")
    broken = doc["taxonomy"]["expected_edges_broken"]
    lines.append("# broken-taxonomy-edges: " + (json.dumps(broken) if broken else "none"))
    s = doc["summary"]
    lines.append(
        f"# summary: verified={s['verified']} violated={s['violated']}"
        f" skipped={s['skipped_out_of_bounds']}"
    )
    lines.append("# generated-at: " + doc["generated_at"])
    lines.append(
        "# timings-ms: "
        + " ".join(f"{k}={v}" for k, v in doc["timings_ms"].items())
    )
    return "\n".join(lines) + "\n"


def strip_volatile(doc: dict) -> dict:
    """The comparison payload: everything except the flagged timestamp and
    timing block."""
    out = dict(doc)
    out.pop("generated_at", None)
    out.pop("timings_ms", None)
    return out
