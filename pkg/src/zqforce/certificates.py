"""Machine-checkable certificates for claimed Z / Z_q values.

A certificate is a token set plus a replayable trace of moves. The checker
here is written against the game rules directly, with plain set arithmetic,
so it stays an independent validator for the solvers' output.

Text form, one move per line:

    token 3
    force 2 3
    announce 1,2;4,5
    reveal 1,2

where announced/revealed components are comma-joined vertex lists separated
by semicolons.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import EdgeListParseError
from .graphs import Graph, unfilled_components


@dataclass(frozen=True)
class TokenMove:
    vertex: int


@dataclass(frozen=True)
class ForceMove:
    source: int
    target: int


@dataclass(frozen=True)
class AnnounceMove:
    components: tuple  # tuple of frozensets


@dataclass(frozen=True)
class RevealMove:
    components: tuple


@dataclass(frozen=True)
class Certificate:
    tokens: frozenset
    trace: tuple

    @property
    def value(self) -> int:
        return len(self.tokens)


@dataclass(frozen=True)
class CheckResult:
    ok: bool
    failed_step: int | None = None
    reason: str | None = None


def _canon_components(comps) -> tuple:
    return tuple(sorted((frozenset(c) for c in comps), key=min))


def certificate_from_tokens(g: Graph, tokens) -> Certificate:
    """Certificate for a plain zero forcing set: all tokens up front, then
    one closure force sequence. Raises if the tokens do not force all of g."""
    from .forcing import closure_with_forces

    tokens = list(tokens)
    closed, forces = closure_with_forces(g, tokens)
    if closed != frozenset(range(g.n)):
        raise ValueError("token set is not a zero forcing set")
    trace = [TokenMove(v) for v in tokens]
    trace.extend(ForceMove(f.source, f.target) for f in forces)
    return Certificate(tokens=frozenset(tokens), trace=tuple(trace))


def format_certificate(cert: Certificate) -> str:
    lines = []
    for mv in cert.trace:
        if isinstance(mv, TokenMove):
            lines.append(f"token {mv.vertex}")
        elif isinstance(mv, ForceMove):
            lines.append(f"force {mv.source} {mv.target}")
        elif isinstance(mv, AnnounceMove):
            lines.append("announce " + _format_components(mv.components))
        elif isinstance(mv, RevealMove):
            lines.append("reveal " + _format_components(mv.components))
        else:
            raise TypeError(f"unknown move {mv!r}")
    return "\n".join(lines) + "\n"


def _format_components(comps) -> str:
    return ";".join(",".join(str(v) for v in sorted(c)) for c in _canon_components(comps))


def _parse_components(text: str, lineno: int) -> tuple:
    comps = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            raise EdgeListParseError(lineno, "empty component in announce/reveal")
        try:
            comps.append(frozenset(int(tok) for tok in chunk.split(",")))
        except ValueError:
            raise EdgeListParseError(lineno, f"bad component {chunk!r}") from None
    return _canon_components(comps)


def parse_certificate(text: str) -> Certificate:
    trace = []
    tokens = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        op, _, rest = line.partition(" ")
        rest = rest.strip()
        if op == "token":
            v = _parse_int(rest, lineno)
            tokens.append(v)
            trace.append(TokenMove(v))
        elif op == "force":
            parts = rest.split()
            if len(parts) != 2:
                raise EdgeListParseError(lineno, f"expected 'force u v', got {line!r}")
            trace.append(ForceMove(_parse_int(parts[0], lineno), _parse_int(parts[1], lineno)))
        elif op == "announce":
            trace.append(AnnounceMove(_parse_components(rest, lineno)))
        elif op == "reveal":
            trace.append(RevealMove(_parse_components(rest, lineno)))
        else:
            raise EdgeListParseError(lineno, f"unknown move {op!r}")
    return Certificate(tokens=frozenset(tokens), trace=tuple(trace))


def _parse_int(text: str, lineno: int) -> int:
    try:
        return int(text)
    except ValueError:
        raise EdgeListParseError(lineno, f"bad vertex {text!r}") from None


def verify_certificate(g: Graph, q: int | None, cert: Certificate) -> CheckResult:
    """Replay the trace under the rules for the given q.

    q is the component-count threshold of the announcement rule; q=None means
    plain zero forcing (announcements are never legal). Forces after a reveal
    are judged inside the revealed subgraph first and as ordinary whole-graph
    forces otherwise; a whole-graph force (like a token or a new announce)
    leaves the window behind.
    """
    filled = set()
    window = None  # revealed subgraph's vertex set while a reveal is active
    pending = None  # announced components awaiting the reveal
    spent = []

    def fail(step, reason):
        return CheckResult(ok=False, failed_step=step, reason=reason)

    for step, mv in enumerate(cert.trace):
        if pending is not None and not isinstance(mv, RevealMove):
            return fail(step, "announcement must be followed by a reveal")
        if isinstance(mv, TokenMove):
            v = mv.vertex
            if not (0 <= v < g.n):
                return fail(step, f"token on invalid vertex {v}")
            if v in filled:
                return fail(step, f"token on already-filled vertex {v}")
            filled.add(v)
            spent.append(v)
            window = None
        elif isinstance(mv, AnnounceMove):
            if q is None:
                return fail(step, "announcements are not legal in plain zero forcing")
            comps = unfilled_components(g, filled)
            if len(comps) <= q:
                return fail(step, f"only {len(comps)} unfilled components, need more than q={q}")
            announced = set(mv.components)
            if len(announced) != len(mv.components):
                return fail(step, "duplicate component in announcement")
            if len(announced) < q + 1:
                return fail(step, f"announced {len(announced)} components, need at least {q + 1}")
            actual = set(comps)
            if not announced <= actual:
                return fail(step, "announced set is not an unfilled component")
            pending = announced
            window = None
        elif isinstance(mv, RevealMove):
            if pending is None:
                return fail(step, "reveal without a preceding announcement")
            revealed = set(mv.components)
            if len(revealed) != len(mv.components):
                return fail(step, "duplicate component in reveal")
            if not revealed or not revealed <= pending:
                return fail(step, "reveal must be a nonempty subset of the announcement")
            window = frozenset(filled) | frozenset().union(*revealed)
            pending = None
        elif isinstance(mv, ForceMove):
            u, v = mv.source, mv.target
            if not (0 <= u < g.n and 0 <= v < g.n):
                return fail(step, f"force with invalid endpoints ({u}, {v})")
            if u not in filled:
                return fail(step, f"force source {u} is unfilled")
            if v in filled:
                return fail(step, f"force target {v} is already filled")
            in_window = window is not None and [
                w for w in g.adjacency[u] if w in window and w not in filled
            ] == [v]
            whole = [w for w in g.adjacency[u] if w not in filled] == [v]
            if not in_window and not whole:
                return fail(step, f"{u} does not have {v} as its unique unfilled neighbor")
            if not in_window:
                # An ordinary forcing move is always available; taking one
                # leaves the announced window behind.
                window = None
            filled.add(v)
        else:
            return fail(step, f"unknown move {mv!r}")

    if pending is not None:
        return fail(len(cert.trace), "trace ends on an unanswered announcement")
    if filled != set(range(g.n)):
        return fail(len(cert.trace), "trace does not fill every vertex")
    if frozenset(spent) != cert.tokens or len(spent) != len(cert.tokens):
        return fail(len(cert.trace), "token set does not match the trace's token moves")
    return CheckResult(ok=True)


def check_certificate(g: Graph, q: int | None, cert: Certificate) -> bool:
    return verify_certificate(g, q, cert).ok
