"""
Tests for writing and reading whitespace runs at CSS anchors.
"""

import logging

import pytest
from hypothesis import given
from hypothesis import strategies as st

from stylesteg.bitstream import SPACE, TAB, BitString
from stylesteg.css.codec import (
    StegoParams,
    anchor_runs,
    canonicalize,
    capacity,
    channel_bits,
    embed_bits,
    extract_bits,
    is_visually_equivalent,
    strip_anchor_runs,
)
from stylesteg.css.scanner import scan
from stylesteg.errors import CapacityExceededError

from tests.strategies import css_documents

K8 = StegoParams(bits_per_anchor=8)


class TestStegoParams:
    """Tests for channel parameters."""

    def test_default(self):
        """Test k defaults to 8."""
        assert StegoParams().bits_per_anchor == 8

    @pytest.mark.parametrize("k", [0, -1, 65])
    def test_out_of_range(self, k):
        """Test k outside 1..64 is rejected."""
        with pytest.raises(ValueError, match="bits_per_anchor"):
            StegoParams(bits_per_anchor=k)

    def test_bounds_accepted(self):
        """Test k=1 and k=64 are valid."""
        assert StegoParams(1).bits_per_anchor == 1
        assert StegoParams(64).bits_per_anchor == 64


class TestCanonicalize:
    """Tests for stripping pre-existing anchor whitespace."""

    def test_strip_single_space(self):
        """Test one trailing space after an anchor is removed."""
        assert canonicalize(scan(b"color: #FFF; \n")).data == b"color: #FFF;\n"

    def test_canonical_input_unchanged(self, site_css):
        """Test an already canonical document is returned byte-identical."""
        doc = scan(site_css)
        assert canonicalize(doc) is doc
        assert canonicalize(doc).data == site_css

    def test_non_anchor_whitespace_untouched(self):
        """Test trailing whitespace not after an anchor semicolon is kept."""
        data = b"p { color: red; }  \nx: y;\t\n  \n"
        assert canonicalize(scan(data)).data == b"p { color: red; }  \nx: y;\n  \n"

    def test_crlf_preserved(self):
        """Test runs before CR are stripped and CRLF stays."""
        assert canonicalize(scan(b"a: b; \t\r\n")).data == b"a: b;\r\n"

    def test_anchors_recomputed(self):
        """Test the result's anchors address the stripped bytes."""
        doc = canonicalize(scan(b"a: b;   \nc: d;  "))
        assert [a.semicolon_offset for a in doc.anchors] == [4, 10]
        assert doc.is_canonical

    @given(css_documents())
    def test_idempotent(self, data):
        """Test canonicalize(canonicalize(d)) == canonicalize(d)."""
        once = canonicalize(scan(data))
        assert canonicalize(once).data == once.data
        assert len(once.anchors) == len(scan(data).anchors)


class TestCapacity:
    """Tests for capacity reporting."""

    def test_sample_stylesheet(self, site_css):
        """Test 14 anchors at k=8 give 112 channel bits and 80 payload bits."""
        doc = scan(site_css)
        assert channel_bits(doc, K8) == 112
        assert capacity(doc, K8) == 80

    def test_zero_anchors(self):
        """Test no anchors means no capacity."""
        assert capacity(scan(b""), K8) == 0
        assert capacity(scan(b"a { color: red }"), StegoParams(64)) == 0

    def test_header_exactly_consumed(self):
        """Test 4 anchors at k=8 leave nothing after the header."""
        assert capacity(scan(b"a;\nb;\nc;\nd;\n"), K8) == 0

    def test_one_bit_per_anchor(self, site_css):
        """Test 14 anchors at k=1 cannot even carry the header."""
        assert capacity(scan(site_css), StegoParams(1)) == 0


class TestEmbedBits:
    """Tests for writing a stream into anchors."""

    def test_chunking(self):
        """Test 101 over two anchors at k=2 gives TAB SPACE then TAB."""
        out = embed_bits(scan(b"a;\nb;\n"), BitString.from_str("101"), StegoParams(2))
        assert out == b"a;\t \nb;\t\n"

    def test_later_anchors_untouched(self):
        """Test anchors past the last chunk receive nothing."""
        out = embed_bits(scan(b"a;\nb;\nc;\n"), BitString.from_str("11"), StegoParams(2))
        assert out == b"a;\t\t\nb;\nc;\n"

    def test_empty_stream(self):
        """Test an empty stream returns the canonicalized input."""
        doc = scan(b"a; \nb;\n")
        assert embed_bits(doc, BitString(), K8) == b"a;\nb;\n"

    def test_canonicalizes_first(self):
        """Test pre-existing runs are replaced, not extended."""
        out = embed_bits(scan(b"a;\t\t\t\n"), BitString.from_str("0"), K8)
        assert out == b"a; \n"

    def test_eof_anchor(self):
        """Test a run is written at end of file."""
        assert embed_bits(scan(b"a;"), BitString.from_str("10"), K8) == b"a;\t "

    def test_capacity_exceeded(self):
        """Test streams longer than anchors x k raise CapacityExceededError."""
        with pytest.raises(CapacityExceededError) as exc_info:
            embed_bits(scan(b"a;\nb;\n"), BitString.from_str("10101"), StegoParams(2))
        assert exc_info.value.required_bits == 5
        assert exc_info.value.available_bits == 4
        assert exc_info.value.layer == "channel"

    def test_exact_fit(self, site_css):
        """Test a stream filling every anchor is accepted."""
        stream = BitString((1, 0) * 56)
        out = embed_bits(scan(site_css), stream, K8)
        assert extract_bits(out, K8) == stream


class TestExtractBits:
    """Tests for reading a stream back from anchors."""

    def test_inverse_of_chunking_example(self):
        """Test the two-anchor example reads back 101."""
        assert extract_bits(b"a;\t \nb;\t\n", StegoParams(2)) == BitString.from_str("101")

    def test_canonical_document(self, site_css):
        """Test a document without runs yields no bits."""
        assert extract_bits(site_css, K8) == BitString()

    def test_oversized_runs_warn(self, caplog):
        """Test runs longer than k are read in full and logged."""
        with caplog.at_level(logging.WARNING, logger="stylesteg.css.codec"):
            bits = extract_bits(b"a;\t\t\t\n", StegoParams(2))
        assert bits == BitString.from_str("111")
        assert "more than 2 whitespace characters" in caplog.text

    def test_anchor_runs(self):
        """Test per-anchor runs carry line numbers and bits."""
        runs = anchor_runs(b"x {\na: b;\t \nc: d;\n}\n")
        assert [r.line for r in runs] == [2, 3]
        assert runs[0].run.chars == b"\t "
        assert runs[0].bits == BitString.from_str("10")
        assert runs[1].bits == BitString()

    def test_crlf_twin_reads_identically(self, site_css):
        """Test an embed converted to CRLF reports the same runs and lines."""
        stego = embed_bits(scan(site_css), BitString((1, 1, 0) * 30), K8)
        lf_runs = anchor_runs(stego)
        crlf_runs = anchor_runs(stego.replace(b"\n", b"\r\n"))
        assert [(r.line, r.bits) for r in lf_runs] == [(r.line, r.bits) for r in crlf_runs]


class TestChannelProperties:
    """Round-trip and cover-preservation properties over random stylesheets."""

    @given(st.data(), css_documents(), st.integers(min_value=1, max_value=16))
    def test_round_trip_prefix(self, data, css, k):
        """Test extract_bits(embed_bits(d, s)) begins with s."""
        params = StegoParams(k)
        doc = canonicalize(scan(css))
        limit = channel_bits(doc, params)
        bits = data.draw(st.lists(st.integers(0, 1), max_size=limit))
        stream = BitString(tuple(bits))

        stego = embed_bits(doc, stream, params)
        assert extract_bits(stego, params)[: stream.length] == stream

    @given(st.data(), css_documents(), st.integers(min_value=1, max_value=16))
    def test_cover_preserved(self, data, css, k):
        """Test stripping anchor runs from the stego output gives the canonical cover."""
        params = StegoParams(k)
        doc = canonicalize(scan(css))
        bits = data.draw(st.lists(st.integers(0, 1), max_size=channel_bits(doc, params)))
        stego = embed_bits(doc, BitString(tuple(bits)), params)

        assert strip_anchor_runs(stego) == doc.data
        assert is_visually_equivalent(css, stego)
        assert len(stego) - len(doc.data) == len(bits)
        assert stego.count(b"\n") == doc.data.count(b"\n")
        assert stego.count(b"\r") == doc.data.count(b"\r")
        removed = bytes(b for b in stego if b not in (SPACE, TAB))
        assert removed == bytes(b for b in doc.data if b not in (SPACE, TAB))

    @given(st.data(), css_documents(), st.integers(min_value=1, max_value=16))
    def test_anchor_stability(self, data, css, k):
        """Test the stego output has the same anchors shifted by inserted runs."""
        params = StegoParams(k)
        doc = canonicalize(scan(css))
        bits = data.draw(st.lists(st.integers(0, 1), max_size=channel_bits(doc, params)))
        stego_doc = scan(embed_bits(doc, BitString(tuple(bits)), params))

        assert len(stego_doc.anchors) == len(doc.anchors)
        shift = 0
        for before, after in zip(doc.anchors, stego_doc.anchors):
            assert after.semicolon_offset == before.semicolon_offset + shift
            shift += after.existing_trailing


class TestVisualEquivalence:
    """Tests for the strip-and-compare check."""

    def test_sample_stylesheet(self, site_css):
        """Test an embed into the sample stylesheet only adds anchor whitespace."""
        stego = embed_bits(scan(site_css), BitString((0, 1) * 40), K8)
        assert stego != site_css
        assert is_visually_equivalent(site_css, stego)
        inserted = len(stego) - len(site_css)
        assert inserted == 80

    def test_content_change_detected(self, site_css):
        """Test edits outside anchor runs are reported."""
        edited = site_css.replace(b"#444", b"#445", 1)
        assert not is_visually_equivalent(site_css, edited)

    def test_whitespace_elsewhere_detected(self):
        """Test whitespace added outside anchor runs is a difference."""
        assert not is_visually_equivalent(b"a { b: c; }\n", b"a { b: c; } \n")
