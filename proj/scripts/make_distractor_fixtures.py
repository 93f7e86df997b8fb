"""Writes the tagged sentences used by the distractor tests."""

import os
import sys

from tagged import sentence, tok, write_jsonl

OUT = sys.argv[1] if len(sys.argv) > 1 else os.path.join(os.path.dirname(__file__), "..", "tests", "data")


def toks(spec):
    out = []
    for item in spec:
        text, pos, *rest = item
        out.append(tok(text, pos, rest[0] if rest else "", rest[1] if len(rest) > 1 else None))
    return out


profession = sentence(
    "profession",
    toks([("No", "DT"), ("man", "NN"), ("likes", "VBZ", "", "like"), ("to", "TO"), ("acknowledge", "VB"),
          ("that", "IN"), ("he", "PRP"), ("has", "VBZ", "", "have"), ("made", "VBN", "", "make"), ("a", "DT"),
          ("mistake", "NN"), ("in", "IN"), ("the", "DT"), ("choice", "NN"), ("of", "IN"), ("his", "PRP$"),
          ("profession", "NN"), (".", ".")]),
    [(2, [("ARG0", 0, 2), ("ARG1", 3, 17)]),
     (4, [("ARG0", 0, 2), ("ARG1", 5, 17)]),
     (8, [("ARG0", 6, 7), ("ARG1", 9, 17)])],
    article="sat2-1", ordinal=1)

ethics = sentence(
    "ethics",
    toks([("Ethics", "NNS"), ("should", "MD"), ("apply", "VB"), ("when", "WRB"), ("someone", "NN"),
          ("makes", "VBZ", "", "make"), ("an", "DT"), ("economic", "JJ"), ("decision", "NN"), (".", ".")]),
    [(2, [("ARG1", 0, 1), ("TMP", 3, 9)]), (5, [("ARG0", 4, 5), ("ARG1", 6, 9)])],
    article="sat2-2", ordinal=1)

chie = sentence(
    "chie",
    toks([("Chie", "NNP", "PER"), ("heard", "VBD", "", "hear"), ("her", "PRP$"), ("soft", "JJ"),
          ("scuttling", "JJ"), ("footsteps", "NNS", "", "footstep"), (",", ","), ("the", "DT"), ("creak", "NN"),
          ("of", "IN"), ("the", "DT"), ("door", "NN"), (".", ".")]),
    [(1, [("ARG0", 0, 1), ("ARG1", 2, 12)])],
    article="sat1-1", ordinal=1)
akira = sentence(
    "akira",
    toks([("Akira", "NNP", "PER"), ("waited", "VBD", "", "wait"), ("for", "IN"), ("his", "PRP$"),
          ("mother", "NN"), ("in", "IN"), ("Tokyo", "NNP", "LOC"), (".", ".")]),
    [(1, [("ARG0", 0, 1), ("ARG1", 2, 5), ("LOC", 5, 7)])],
    article="sat1-1", ordinal=2)

asteroids = sentence(
    "asteroids",
    toks([("Deep", "NNP", "ORG"), ("Space", "NNP", "ORG"), ("Industries", "NNPS", "ORG"), ("of", "IN"),
          ("Virginia", "NNP", "LOC"), ("hopes", "VBZ", "", "hope"), ("to", "TO"), ("be", "VB"),
          ("harvesting", "VBG", "", "harvest"), ("metals", "NNS", "", "metal"), ("from", "IN"),
          ("asteroids", "NNS", "", "asteroid"), ("by", "IN"), ("2020", "CD", "DATE"), (".", ".")]),
    [(5, [("ARG0", 0, 5), ("ARG1", 6, 14)]),
     (8, [("ARG0", 0, 5), ("ARG1", 9, 10), ("DIR", 10, 12), ("TMP", 12, 14)])],
    article="sat1-5", ordinal=1)

team = sentence(
    "team",
    toks([("The", "DT"), ("team", "NN"), ("moved", "VBD", "", "move"), ("to", "IN"), ("New", "NNP", "LOC"),
          ("York", "NNP", "LOC"), ("on", "IN"), ("Friday", "NNP", "DATE"), (".", ".")]),
    [(2, [("ARG1", 0, 2), ("GOL", 3, 6), ("TMP", 6, 8)])],
    article="team", ordinal=1)

insights = sentence(
    "insights",
    toks([("Their", "PRP$"), ("insights", "NNS", "", "insight"), ("are", "VBP", "", "be"), ("subject", "JJ"),
          ("to", "TO"), ("egocentrism", "NN"), (".", ".")]),
    [(2, [("ARG1", 0, 2), ("ARG2", 3, 6)])],
    article="insights", ordinal=1)

write_jsonl(os.path.join(OUT, "distractor_sentences.jsonl"),
            [profession, ethics, chie, akira, asteroids, team, insights])
