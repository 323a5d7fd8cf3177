"""Checks the hand-written text fixtures against an independent count.

Word and sentence counts use a plain regex split; syllables come from the
CMU pronouncing dictionary, so the fixtures only use words where the vowel
group heuristic and CMUdict agree.
"""
import re
import sys
from pathlib import Path

try:
    import cmudict
except ImportError:  # reported as skipped by ctest
    print("cmudict not installed; skipping")
    sys.exit(77)

DATA = Path(__file__).resolve().parent.parent / "data" / "docs"
CMU = cmudict.dict()


def cmu_syllables(word):
    prons = CMU[word.lower()]
    counts = {sum(ch[-1].isdigit() for ch in p) for p in prons}
    assert len(counts) == 1, (word, counts)
    return counts.pop()


def counts(text):
    words = re.findall(r"[A-Za-z]+", text)
    sentences = len(re.findall(r"[.!?](\s|$)", text))
    return len(words), sentences, sum(cmu_syllables(w) for w in words)


EXPECTED = {
    "fixture_100w.txt": (100, 10, 150),
    "fixture_480w.txt": (480, None, None),
}

ok = True
for name, want in EXPECTED.items():
    got = counts((DATA / name).read_text())
    for g, w in zip(got, want):
        if w is not None and g != w:
            ok = False
    print(name, got)
sys.exit(0 if ok else 1)
