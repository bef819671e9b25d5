import pytest

from zqforce import (
    AnnounceMove,
    Certificate,
    EdgeListParseError,
    ForceMove,
    RevealMove,
    TokenMove,
    certificate_from_tokens,
    check_certificate,
    format_certificate,
    parse_certificate,
    verify_certificate,
)

from helpers import BOWTIE, clique, cycle, path

P3_TRACE = Certificate(
    tokens=frozenset({0}),
    trace=(TokenMove(0), ForceMove(0, 1), ForceMove(1, 2)),
)

# Announcement-driven play on C5 at q=0: two tokens, reveal-driven forces.
C5_TRACE = Certificate(
    tokens=frozenset({0, 2}),
    trace=(
        TokenMove(0),
        TokenMove(2),
        AnnounceMove((frozenset({3, 4}),)),
        RevealMove((frozenset({3, 4}),)),
        ForceMove(2, 3),
        ForceMove(3, 4),
        AnnounceMove((frozenset({1}),)),
        RevealMove((frozenset({1}),)),
        ForceMove(0, 1),
    ),
)


def test_p3_trace_valid_for_any_q():
    for q in (0, 1, 5, None):
        assert check_certificate(path(3), q, P3_TRACE)


def test_triangle_premature_force_rejected_with_step():
    cert = Certificate(tokens=frozenset({0}), trace=(TokenMove(0), ForceMove(0, 1)))
    result = verify_certificate(clique(3), 1, cert)
    assert not result.ok
    assert result.failed_step == 1


def test_c5_announcement_trace_valid_at_q0():
    assert check_certificate(cycle(5), 0, C5_TRACE)


def test_c5_trace_illegal_when_q_too_large():
    # With q=5 no announcement is ever legal on five vertices.
    result = verify_certificate(cycle(5), 5, C5_TRACE)
    assert not result.ok
    assert result.failed_step == 2


def test_announcements_illegal_in_plain_zero_forcing():
    assert not check_certificate(cycle(5), None, C5_TRACE)


def test_force_outside_window_rejected():
    cert = Certificate(
        tokens=frozenset({0, 2}),
        trace=(
            TokenMove(0),
            TokenMove(2),
            AnnounceMove((frozenset({1}),)),
            RevealMove((frozenset({1}),)),
            ForceMove(2, 3),  # 3 is not in the revealed subgraph
        ),
    )
    result = verify_certificate(cycle(5), 0, cert)
    assert not result.ok
    assert result.failed_step == 4


def test_reveal_must_follow_announcement():
    cert = Certificate(
        tokens=frozenset({0, 2}),
        trace=(TokenMove(0), TokenMove(2), RevealMove((frozenset({1}),))),
    )
    assert not check_certificate(cycle(5), 0, cert)


def test_reveal_must_be_subset_of_announcement():
    cert = Certificate(
        tokens=frozenset({0, 2}),
        trace=(
            TokenMove(0),
            TokenMove(2),
            AnnounceMove((frozenset({1}),)),
            RevealMove((frozenset({3, 4}),)),
        ),
    )
    result = verify_certificate(cycle(5), 0, cert)
    assert not result.ok
    assert result.failed_step == 3


def test_incomplete_fill_rejected():
    cert = Certificate(tokens=frozenset({0}), trace=(TokenMove(0),))
    result = verify_certificate(path(3), 0, cert)
    assert not result.ok
    assert result.failed_step == len(cert.trace)


def test_duplicate_token_rejected():
    cert = Certificate(tokens=frozenset({0}), trace=(TokenMove(0), TokenMove(0)))
    assert not check_certificate(path(2), 0, cert)


def test_token_set_must_match_trace():
    cert = Certificate(tokens=frozenset({0, 1}), trace=P3_TRACE.trace)
    assert not check_certificate(path(3), 0, cert)


def test_bowtie_stuck_state_has_no_window_force():
    cert = Certificate(
        tokens=frozenset({0, 1, 2}),
        trace=(
            TokenMove(0),
            TokenMove(1),
            TokenMove(2),
            AnnounceMove((frozenset({3, 4}),)),
            RevealMove((frozenset({3, 4}),)),
            ForceMove(2, 3),  # 2 still has two unfilled neighbors in the window
        ),
    )
    result = verify_certificate(BOWTIE, 0, cert)
    assert not result.ok
    assert result.failed_step == 5


def test_certificate_from_tokens_builds_valid_replay():
    cert = certificate_from_tokens(BOWTIE, [0, 1, 3])
    assert cert.value == 3
    assert check_certificate(BOWTIE, None, cert)
    with pytest.raises(ValueError):
        certificate_from_tokens(cycle(5), [0])


def test_text_round_trip():
    text = format_certificate(C5_TRACE)
    assert text.splitlines() == [
        "token 0",
        "token 2",
        "announce 3,4",
        "reveal 3,4",
        "force 2 3",
        "force 3 4",
        "announce 1",
        "reveal 1",
        "force 0 1",
    ]
    assert parse_certificate(text) == C5_TRACE


def test_multi_component_announce_round_trip():
    cert = Certificate(
        tokens=frozenset(),
        trace=(AnnounceMove((frozenset({1}), frozenset({3, 4}))),),
    )
    text = format_certificate(cert)
    assert "announce 1;3,4" in text
    assert parse_certificate(text) == cert


def test_parse_certificate_rejects_garbage():
    with pytest.raises(EdgeListParseError):
        parse_certificate("token x")
    with pytest.raises(EdgeListParseError):
        parse_certificate("jump 1 2")
    with pytest.raises(EdgeListParseError):
        parse_certificate("force 1")
