"""Writes the tagged sentences used by the answer-selection and filtering tests."""

import os
import sys

from tagged import sentence, tok, write_jsonl

OUT = sys.argv[1] if len(sys.argv) > 1 else os.path.join(os.path.dirname(__file__), "..", "tests", "data")


def toks(spec):
    out = []
    for item in spec:
        text, pos, *rest = item
        out.append(tok(text, pos, rest[0] if rest else ""))
    return out


widget = sentence("widget", toks([("This", "PDT"), ("widget", "NN"), ("is", "VBZ"), ("more", "RBR"),
                                  ("technologically", "RB"), ("advanced", "JJ"), ("now", "RB"), (".", ".")]),
                  [(2, [("ARG1", 0, 2), ("ARG2", 3, 6), ("TMP", 6, 7)])],
                  heads=[1, 2, -1, 5, 5, 2, 2, 2], article="widget", ordinal=1)

mit_words = [("The", "DT"), ("engineers", "NNS"), ("at", "IN"), ("the", "DT"),
             ("Massachusetts", "NNP", "ORG"), ("Institute", "NNP", "ORG"), ("of", "IN", "ORG"),
             ("Technology", "NNP", "ORG"), ("(", "-LRB-"), ("MIT", "NNP", "ORG"), (")", "-RRB-"),
             ("have", "VBP"), ("taken", "VBN"), ("it", "PRP"), ("a", "DT"), ("step", "NN"),
             ("further", "RB"), ("changing", "VBG"), ("the", "DT"), ("actual", "JJ"),
             ("composition", "NN"), ("of", "IN"), ("plants", "NNS"), ("in", "IN"), ("order", "NN"),
             ("to", "TO"), ("get", "VB"), ("them", "PRP"), ("to", "TO"), ("perform", "VB"),
             ("diverse", "JJ"), (",", ","), ("even", "RB"), ("unusual", "JJ"), ("functions", "NNS"),
             (".", ".")]
mit = sentence("mit", toks(mit_words), [(12, [("ARG0", 0, 2), ("ARG1", 13, 14), ("ARG2", 14, 17)])],
               article="mit", ordinal=1)

# While I tend to buy a lot of books, these three were given to me as gifts,
# which might add to the meaning I attach to them.
gifts_words = [("While", "IN"), ("I", "PRP"), ("tend", "VBP"), ("to", "TO"), ("buy", "VB"), ("a", "DT"),
               ("lot", "NN"), ("of", "IN"), ("books", "NNS"), (",", ","), ("these", "DT"), ("three", "CD"),
               ("were", "VBD"), ("given", "VBN"), ("to", "IN"), ("me", "PRP"), ("as", "IN"),
               ("gifts", "NNS"), (",", ","), ("which", "WDT"), ("might", "MD"), ("add", "VB"), ("to", "IN"),
               ("the", "DT"), ("meaning", "NN"), ("I", "PRP"), ("attach", "VBP"), ("to", "IN"),
               ("them", "PRP"), (".", ".")]
gifts_heads = [2, 2, 13, 4, 2, 6, 4, 8, 6, 13, 11, 13, 13, -1, 15, 13, 17, 13, 21, 21, 21, 17, 24, 24,
               21, 26, 24, 28, 26, 13]
gifts = sentence("gifts", toks(gifts_words),
                 [(2, [("ARG0", 1, 2)]),
                  (4, [("ARG1", 5, 9)]),
                  (13, [("ARG1", 10, 12), ("ARG2", 14, 16), ("ARG3", 16, 18)]),
                  (21, [("ARG0", 19, 20), ("ARG2", 22, 29)])],
                 heads=gifts_heads, article="books", ordinal=6)

olympics_words = [("The", "DT"), ("longest", "JJS"), ("track", "NN"), ("and", "CC"), ("field", "NN"),
                  ("event", "NN"), ("at", "IN"), ("the", "DT"), ("Summer", "NNP", "MISC"),
                  ("Olympics", "NNPS", "MISC"), ("is", "VBZ"), ("the", "DT"), ("50-kilometer", "JJ"),
                  ("race", "NN"), ("walk", "NN"), (",", ","), ("which", "WDT"), ("is", "VBZ"),
                  ("about", "RB"), ("five", "CD"), ("miles", "NNS"), ("longer", "JJR"), ("than", "IN"),
                  ("the", "DT"), ("marathon", "NN"), (".", ".")]
olympics_heads = [5, 5, 5, 2, 2, 10, 5, 9, 9, 6, -1, 14, 14, 14, 10, 14, 17, 14, 19, 20, 21, 17, 24, 24,
                  21, 10]
olympics = sentence("olympics", toks(olympics_words), [(10, [("ARG1", 0, 10), ("ARG2", 11, 15)])],
                    heads=olympics_heads, article="olympics", ordinal=1)

first_constituency = (
    "(ROOT (S (NP (NP (DT The) (JJ first)) (, ,) (SBAR (WHNP (WDT which)) (S (NP (PRP I)) "
    "(VP (VBP take) (PP (TO to) (S (VP (VBG reading) (NP (DT every) (NN spring))))))))) "
    "(VP (VBZ is) (NP (NP (NNP Ernest) (NNP Hemningway) (POS 's)) (NNP A) (NNP Moveable) (NNP Feast))) "
    "(. .)))")
first_words = [("The", "DT"), ("first", "JJ"), (",", ","), ("which", "WDT"), ("I", "PRP"), ("take", "VBP"),
               ("to", "TO"), ("reading", "VBG"), ("every", "DT"), ("spring", "NN"), ("is", "VBZ"),
               ("Ernest", "NNP", "PER"), ("Hemningway", "NNP", "PER"), ("'s", "POS"), ("A", "NNP", "MISC"),
               ("Moveable", "NNP", "MISC"), ("Feast", "NNP", "MISC"), (".", ".")]
first = sentence("first", toks(first_words), [(10, [("ARG1", 0, 10), ("ARG2", 11, 17)])],
                 heads=[1, 10, 1, 5, 5, 1, 5, 6, 9, 7, -1, 12, 16, 12, 16, 16, 10, 10],
                 constituency=first_constituency, article="books", ordinal=2)

three_books = sentence("three-books", toks([("There", "EX"), ("are", "VBP"), ("three", "CD"),
                                            ("books", "NNS"), ("I", "PRP"), ("reread", "VBP"),
                                            ("annually", "RB"), (".", ".")]),
                       [(1, [("ARG0", 0, 1), ("ARG1", 2, 7)]), (5, [("ARG0", 4, 5), ("ARG1", 3, 4), ("TMP", 6, 7)])],
                       heads=[1, -1, 3, 1, 5, 3, 5, 1], article="books", ordinal=1)
# A fragment: no subject-verb-object frame, so it is unsuitable.
cortazar = sentence("cortazar", toks([("And", "CC"), ("because", "IN"), ("Cortazar", "NNP", "PER"),
                                      (".", ".")]),
                    [(2, [])], heads=[2, 2, -1, 2], article="books", ordinal=3)

people = sentence("people", toks([("People", "NNS"), ("love", "VBP"), ("the", "DT"), ("new", "JJ"),
                                  ("library", "NN"), ("downtown", "RB"), (".", ".")]),
                  [(1, [("ARG0", 0, 1), ("ARG1", 2, 5), ("LOC", 5, 6)])],
                  heads=[1, -1, 4, 4, 1, 1, 1], article="people", ordinal=1)

write_jsonl(os.path.join(OUT, "tp3_sentences.jsonl"),
            [widget, mit, gifts, olympics, first, three_books, cortazar, people])
