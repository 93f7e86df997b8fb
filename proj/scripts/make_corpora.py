"""Writes data/seed_pairs.jsonl and the 1,025-sentence data/scale_corpus.jsonl.

Both are deterministic. The scale corpus mixes sentences that match a seed
pair exactly, sentences that extend a seed pattern, a pattern no seed pair
covers, and two-clause sentences whose extra clause matches a different pair.
"""

import os
import random
import sys

from tagged import sentence, tok, write_jsonl

OUT = sys.argv[1] if len(sys.argv) > 1 else os.path.join(os.path.dirname(__file__), "..", "data")
P = "."


def pair(decl, *questions):
    return {"declarative": decl, "interrogatives": list(questions)}


def words(spec):
    """"a/DT story/NN" -> tokens; NE after a second slash."""
    out = []
    for w in spec.split():
        parts = w.split("/")
        text, pos = parts[0].replace("_", " "), parts[1]
        ne = parts[2] if len(parts) > 2 else ""
        lemma = text if pos.startswith("NNP") else None
        out.append(tok(text, pos, ne, lemma))
    return out


def lem(t, lemma):
    t["lemma"] = lemma
    return t


def seeds():
    story = "a/DT story/NN book/NN on/IN the/DT American/JJ history/NN"
    amanda = sentence("seed-amanda", words("Amanda/NNP/PER") + [lem(tok("has", "VBZ"), "have")]
                      + words(story) + [tok(P, P)], [(1, [("ARG0", 0, 1), ("ARG1", 2, 9)])])
    amanda_who = sentence("seed-amanda-q1", [tok("Who", "WP"), lem(tok("has", "VBZ"), "have")] + words(story)
                          + [tok("?", ".")], [(1, [("ARG0", 0, 1), ("ARG1", 2, 9)])])
    amanda_what = sentence("seed-amanda-q2", words("What/WP") + [lem(tok("does", "VBZ"), "do")]
                           + words("Amanda/NNP/PER") + [lem(tok("have", "VB"), "have"), tok("?", ".")],
                           [(3, [("ARG1", 0, 1), ("V", 1, 2), ("ARG0", 2, 3)])])

    doughnut = sentence("seed-doughnut", words("A/DT doughnut/NN") + [lem(tok("is", "VBZ"), "be")]
                        + words("a/DT fried/JJ dough/NN confection/NN") + [tok(P, P)],
                        [(2, [("ARG1", 0, 2), ("ARG2", 3, 7)])])
    doughnut_what = sentence("seed-doughnut-q1", words("What/WP") + [lem(tok("is", "VBZ"), "be")]
                             + words("a/DT doughnut/NN") + [tok("?", ".")],
                             [(1, [("ARG1", 0, 1), ("ARG2", 2, 4)])])

    uranus = sentence("seed-uranus", words("Uranus/NNP") + [lem(tok("is", "VBZ"), "be")]
                      + words("an/DT unusual/JJ planet/NN because/IN it/PRP")
                      + [lem(tok("is", "VBZ"), "be"), lem(tok("tilted", "VBN"), "tilt"), tok(P, P)],
                      [(1, [("ARG1", 0, 1), ("ARG2", 2, 5), ("CAU", 5, 9)]), (8, [("ARG1", 6, 7)])],
                      heads=[1, -1, 4, 4, 1, 8, 8, 8, 1, 1])
    uranus_why = sentence("seed-uranus-q1", words("Why/WRB") + [lem(tok("is", "VBZ"), "be")]
                          + words("Uranus/NNP an/DT unusual/JJ planet/NN") + [tok("?", ".")],
                          [(1, [("CAU", 0, 1), ("ARG1", 2, 3), ("ARG2", 3, 6)])])

    john = sentence("seed-john", words("John/NNP/PER") + [lem(tok("traveled", "VBD"), "travel")]
                    + words("to/IN Boston/NNP/LOC last/NN week/NN") + [tok(P, P)],
                    [(1, [("ARG0", 0, 1), ("ARG1", 2, 4), ("TMP", 4, 6)])], phrases=[(1, 3)])
    john_where = sentence("seed-john-q1", words("Where/WRB") + [lem(tok("did", "VBD"), "do")]
                          + words("John/NNP/PER") + [lem(tok("travel", "VB"), "travel")]
                          + words("to/IN last/NN week/NN") + [tok("?", ".")],
                          [(3, [("LOC", 0, 1), ("V", 1, 2), ("ARG0", 2, 3), ("ARG1", 4, 5), ("TMP", 5, 7)])],
                          phrases=[(3, 5)])

    maria = sentence("seed-maria", words("Maria/NNP/PER") + [lem(tok("opened", "VBD"), "open")]
                     + words("a/DT small/JJ bakery/NN in/IN Paris/NNP/LOC") + [tok(P, P)],
                     [(1, [("ARG0", 0, 1), ("ARG1", 2, 5), ("LOC", 5, 7)])])
    maria_where = sentence("seed-maria-q1", words("Where/WRB") + [lem(tok("did", "VBD"), "do")]
                           + words("Maria/NNP/PER") + [lem(tok("open", "VB"), "open")]
                           + words("a/DT small/JJ bakery/NN") + [tok("?", ".")],
                           [(3, [("LOC", 0, 1), ("V", 1, 2), ("ARG0", 2, 3), ("ARG1", 4, 7)])])
    maria_who = sentence("seed-maria-q2", [tok("Who", "WP"), lem(tok("opened", "VBD"), "open")]
                         + words("a/DT small/JJ bakery/NN in/IN Paris/NNP/LOC") + [tok("?", ".")],
                         [(1, [("ARG0", 0, 1), ("ARG1", 2, 5), ("LOC", 5, 7)])])

    committee = sentence("seed-committee", words("The/DT finance/NN committee/NN")
                         + [lem(tok("approved", "VBD"), "approve")] + words("the/DT annual/JJ budget/NN")
                         + [tok(P, P)],
                         [(3, [("ARG0", 0, 3), ("ARG1", 4, 7)])])
    committee_who = sentence("seed-committee-q1", [tok("Who", "WP"), lem(tok("approved", "VBD"), "approve")]
                             + words("the/DT annual/JJ budget/NN") + [tok("?", ".")],
                             [(1, [("ARG0", 0, 1), ("ARG1", 2, 5)])])
    committee_what = sentence("seed-committee-q2", words("What/WP") + [lem(tok("did", "VBD"), "do")]
                              + words("the/DT finance/NN committee/NN") + [lem(tok("approve", "VB"), "approve"),
                                                                            tok("?", ".")],
                              [(5, [("ARG1", 0, 1), ("V", 1, 2), ("ARG0", 2, 5)])])

    museum = sentence("seed-museum", words("The/DT city/NN") + [lem(tok("opened", "VBD"), "open")]
                      + words("the/DT science/NN museum/NN in/IN 1998/CD/DATE") + [tok(P, P)],
                      [(2, [("ARG0", 0, 2), ("ARG1", 3, 6), ("TMP", 6, 8)])])
    museum_when = sentence("seed-museum-q1", words("When/WRB") + [lem(tok("did", "VBD"), "do")]
                           + words("the/DT city/NN") + [lem(tok("open", "VB"), "open")]
                           + words("the/DT science/NN museum/NN") + [tok("?", ".")],
                           [(4, [("TMP", 0, 1), ("V", 1, 2), ("ARG0", 2, 4), ("ARG1", 5, 8)])])

    mars = sentence("seed-mars", words("The/DT planet/NN Mars/NNP/LOC") + [lem(tok("has", "VBZ"), "have")]
                    + words("two/CD/CARDINAL small/JJ moons/NNS") + [tok(P, P)],
                    [(3, [("ARG0", 0, 3), ("ARG1", 4, 7)])])
    mars_how_many = sentence("seed-mars-q1", words("How/WRB many/JJ small/JJ moons/NNS")
                             + [lem(tok("does", "VBZ"), "do")] + words("the/DT planet/NN Mars/NNP/LOC")
                             + [lem(tok("have", "VB"), "have"), tok("?", ".")],
                             [(8, [("ARG1", 0, 4), ("V", 4, 5), ("ARG0", 5, 8)])])

    return [pair(amanda, amanda_who, amanda_what), pair(doughnut, doughnut_what), pair(uranus, uranus_why),
            pair(john, john_where), pair(maria, maria_where, maria_who),
            pair(committee, committee_who, committee_what), pair(museum, museum_when),
            pair(mars, mars_how_many)]


NAMES = ["Amelia", "Brian", "Carmen", "Daniel", "Elena", "Farid", "Grace", "Hiro", "Ines", "Jonas",
         "Keiko", "Liam", "Mina", "Nora", "Oscar", "Priya", "Quinn", "Rosa", "Samir", "Tara"]
CITIES = ["Boston", "Chicago", "Denver", "Seattle", "Austin", "Portland", "Atlanta", "Houston"]
OBJECTS = [("bicycle", "red"), ("guitar", "old"), ("garden", "small"), ("camera", "new"),
           ("notebook", "blue"), ("kitchen", "large"), ("violin", "cheap"), ("telescope", "powerful")]
VERBS_Z = [("owns", "own"), ("repairs", "repair"), ("paints", "paint"), ("sells", "sell")]
VERBS_D = [("approved", "approve"), ("rejected", "reject"), ("reviewed", "review"), ("published", "publish")]
SHOPS = ["bakery", "bookstore", "cafe", "clinic", "studio"]
GROUPS = [("finance", "committee"), ("city", "council"), ("school", "board"), ("review", "panel")]
DOCS = [("annual", "budget"), ("new", "proposal"), ("final", "report"), ("housing", "plan")]
OWNERS = ["city", "town", "county", "university"]
PLACES = [("science", "museum"), ("public", "library"), ("football", "stadium"), ("children", "hospital")]
TIMES = [("every", "DT", "morning"), ("every", "DT", "weekend"), ("last", "JJ", "year")]
SUBJECTS = [("old", "harbor"), ("quiet", "village"), ("ancient", "castle"), ("empty", "factory")]
GOALS = [("popular", "destination"), ("busy", "market"), ("famous", "landmark")]


def scale_corpus(n=1025, seed=20):
    rng = random.Random(seed)
    out = []
    article = 0
    for i in range(n):
        if i % 5 == 0:
            article += 1
        sid = f"s{i + 1:04d}"
        meta = {"article": f"a{article:03d}", "ordinal": i % 5}
        kind = i % 8
        name = rng.choice(NAMES)
        if kind in (0, 1):  # ARG0/NNP/PER V/VBZ/ ARG1/NN/: perfect
            verb, lemma = rng.choice(VERBS_Z)
            noun, adj = rng.choice(OBJECTS)
            toks = (words(f"{name}/NNP/PER") + [lem(tok(verb, "VBZ"), lemma)] + words(f"{'an' if adj[0] in 'aeiou' else 'a'}/DT {adj}/JJ {noun}/NN")
                    + [tok(P, P)])
            s = sentence(sid, toks, [(1, [("ARG0", 0, 1), ("ARG1", 2, 5)])], **meta)
        elif kind == 2:  # the same plus a temporal tail: successful
            verb, lemma = rng.choice(VERBS_Z)
            noun, adj = rng.choice(OBJECTS)
            a, apos, b = rng.choice(TIMES)
            toks = (words(f"{name}/NNP/PER") + [lem(tok(verb, "VBZ"), lemma)] + words(f"the/DT {adj}/JJ {noun}/NN")
                    + [tok(a, apos), tok(b, "NN"), tok(P, P)])
            s = sentence(sid, toks, [(1, [("ARG0", 0, 1), ("ARG1", 2, 5), ("TMP", 5, 7)])], **meta)
        elif kind == 3:  # ARG0/NNP/PER V/VBD/ ARG1/NN/ LOC/NNP/LOC: perfect
            toks = (words(f"{name}/NNP/PER") + [lem(tok("opened", "VBD"), "open")]
                    + words(f"a/DT small/JJ {rng.choice(SHOPS)}/NN in/IN {rng.choice(CITIES)}/NNP/LOC") + [tok(P, P)])
            s = sentence(sid, toks, [(1, [("ARG0", 0, 1), ("ARG1", 2, 5), ("LOC", 5, 7)])], **meta)
        elif kind == 4:  # ARG0/NN/ V/VBD/ ARG1/NN/: perfect
            verb, lemma = rng.choice(VERBS_D)
            g1, g2 = rng.choice(GROUPS)
            d1, d2 = rng.choice(DOCS)
            toks = (words(f"The/DT {g1}/NN {g2}/NN") + [lem(tok(verb, "VBD"), lemma)]
                    + words(f"the/DT {d1}/JJ {d2}/NN") + [tok(P, P)])
            s = sentence(sid, toks, [(3, [("ARG0", 0, 3), ("ARG1", 4, 7)])], **meta)
        elif kind == 5:  # ARG0/NN/ V/VBD/ ARG1/NN/ TMP/CD/DATE: perfect
            p1, p2 = rng.choice(PLACES)
            toks = (words(f"The/DT {rng.choice(OWNERS)}/NN") + [lem(tok("opened", "VBD"), "open")]
                    + words(f"the/DT {p1}/NN {p2}/NN in/IN {rng.randint(1950, 2019)}/CD/DATE") + [tok(P, P)])
            s = sentence(sid, toks, [(2, [("ARG0", 0, 2), ("ARG1", 3, 6), ("TMP", 6, 8)])], **meta)
        elif kind == 6:  # ARG1/NN/ V/VBD/ ARG2/NN/: no seed pair covers it
            a1, a2 = rng.choice(SUBJECTS)
            b1, b2 = rng.choice(GOALS)
            toks = (words(f"The/DT {a1}/JJ {a2}/NN") + [lem(tok("became", "VBD"), "become")]
                    + words(f"a/DT {b1}/JJ {b2}/NN") + [tok(P, P)])
            s = sentence(sid, toks, [(3, [("ARG1", 0, 3), ("ARG2", 4, 7)])], **meta)
        else:  # two clauses joined by "because"
            verb, lemma = rng.choice(VERBS_D)
            g1, g2 = rng.choice(GROUPS)
            d1, d2 = rng.choice(DOCS)
            p1, p2 = rng.choice(PLACES)
            toks = (words(f"The/DT {g1}/NN {g2}/NN") + [lem(tok(verb, "VBD"), lemma)]
                    + words(f"the/DT {d1}/JJ {d2}/NN because/IN the/DT {p2}/NN")
                    + [lem(tok("needed", "VBD"), "need")] + words("new/JJ funds/NNS") + [tok(P, P)])
            s = sentence(sid, toks, [(3, [("ARG0", 0, 3), ("ARG1", 4, 7), ("CAU", 7, 13)]),
                                     (10, [("ARG0", 8, 10), ("ARG1", 11, 13)])],
                         heads=[2, 2, 3, -1, 6, 6, 3, 10, 9, 10, 3, 12, 10, 3], **meta)
        out.append(s)
    return out


if __name__ == "__main__":
    write_jsonl(os.path.join(OUT, "seed_pairs.jsonl"), seeds())
    write_jsonl(os.path.join(OUT, "scale_corpus.jsonl"), scale_corpus())
