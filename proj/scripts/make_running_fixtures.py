"""Writes the tagged running-sample sentences used by the tests."""

import os
import sys

from tagged import sentence, tok, write_jsonl

OUT = sys.argv[1] if len(sys.argv) > 1 else os.path.join(os.path.dirname(__file__), "..", "tests", "data")
P = "."


def story_book():
    words = [("a", "DT"), ("story", "NN"), ("book", "NN"), ("on", "IN"), ("the", "DT"),
             ("American", "JJ"), ("history", "NN")]
    return [tok(w, p, lemma=w if w == "American" else None) for w, p in words]


# Amanda training pair (who/what).
amanda = sentence("amanda", [tok("Amanda", "NNP", "PER", "Amanda"), tok("has", "VBZ", lemma="have")]
                  + story_book() + [tok(P, P)],
                  [(1, [("ARG0", 0, 1), ("ARG1", 2, 9)])])
amanda_who = sentence("amanda-q1", [tok("Who", "WP"), tok("has", "VBZ", lemma="have")] + story_book()
                      + [tok("?", ".")],
                      [(1, [("ARG0", 0, 1), ("ARG1", 2, 9)])])
amanda_what = sentence("amanda-q2", [tok("What", "WP"), tok("does", "VBZ", lemma="do"),
                                     tok("Amanda", "NNP", "PER", "Amanda"), tok("have", "VB"), tok("?", ".")],
                       [(3, [("ARG1", 0, 1), ("V", 1, 2), ("ARG0", 2, 3)])])

# Doughnut (what) and Uranus (why) training pairs.
doughnut = sentence("doughnut", [tok("A", "DT"), tok("doughnut", "NN"), tok("is", "VBZ", lemma="be"),
                                 tok("a", "DT"), tok("fried", "JJ"), tok("dough", "NN"),
                                 tok("confection", "NN"), tok(P, P)],
                    [(2, [("ARG1", 0, 2), ("ARG2", 3, 7)])])
doughnut_what = sentence("doughnut-q1", [tok("What", "WP"), tok("is", "VBZ", lemma="be"), tok("a", "DT"),
                                         tok("doughnut", "NN"), tok("?", ".")],
                         [(1, [("ARG1", 0, 1), ("ARG2", 2, 4)])])
uranus = sentence("uranus", [tok("Uranus", "NNP", lemma="Uranus"), tok("is", "VBZ", lemma="be"),
                             tok("an", "DT"), tok("unusual", "JJ"), tok("planet", "NN"),
                             tok("because", "IN"), tok("it", "PRP"), tok("is", "VBZ", lemma="be"),
                             tok("tilted", "VBN", lemma="tilt"), tok(P, P)],
                  [(1, [("ARG1", 0, 1), ("ARG2", 2, 5), ("CAU", 5, 9)]),
                   (8, [("ARG1", 6, 7)])],
                  heads=[1, -1, 4, 4, 1, 8, 8, 8, 1, 1])
uranus_why = sentence("uranus-q1", [tok("Why", "WRB"), tok("is", "VBZ", lemma="be"),
                                    tok("Uranus", "NNP", lemma="Uranus"), tok("an", "DT"),
                                    tok("unusual", "JJ"), tok("planet", "NN"), tok("?", ".")],
                      [(1, [("CAU", 0, 1), ("ARG1", 2, 3), ("ARG2", 3, 6)])])

# Inputs: Tom, Duncan and the solar sentence.
tom = sentence("tom", [tok("Tom", "NNP", "PER", "Tom"), tok("has", "VBZ", lemma="have")] + story_book()
               + [tok(P, P)],
               [(1, [("ARG0", 0, 1), ("ARG1", 2, 9)])])
duncan = sentence("duncan", [tok("Duncan", "NNP", "PER", "Duncan"), tok("Watts", "NNP", "PER", "Watts"),
                             tok("agrees", "VBZ", lemma="agree"), tok("with", "IN"), tok("the", "DT"),
                             tok("conclusion", "NN"), tok(P, P)],
                  [(2, [("ARG0", 0, 2), ("ARG1", 3, 6)])], phrases=[(2, 4)])
solar = sentence("solar", [tok("The", "DT"), tok("solar", "JJ"), tok("panel", "NN"),
                           tok("manufacturing", "NN"), tok("industry", "NN"), tok("is", "VBZ", lemma="be"),
                           tok("in", "IN"), tok("the", "DT"), tok("doldrums", "NNS", lemma="doldrums"),
                           tok("because", "IN"), tok("supply", "NN"), tok("far", "RB"),
                           tok("exceeds", "VBZ", lemma="exceed"), tok("demand", "NN"), tok(P, P)],
                 [(5, [("ARG1", 0, 5), ("ARG2", 6, 9), ("CAU", 9, 14)]),
                  (12, [("ARG0", 10, 11), ("EXT", 11, 12), ("ARG1", 13, 14)])],
                 heads=[4, 4, 4, 4, 5, -1, 8, 8, 5, 12, 12, 12, 5, 12, 5])

# Helping-verb example.
john = sentence("john", [tok("John", "NNP", "PER", "John"), tok("traveled", "VBD", lemma="travel"),
                         tok("to", "IN"), tok("Boston", "NNP", "LOC", "Boston"), tok("last", "NN"),
                         tok("week", "NN"), tok(P, P)],
                [(1, [("ARG0", 0, 1), ("ARG1", 2, 4), ("TMP", 4, 6)])], phrases=[(1, 3)])
john_where = sentence("john-q1", [tok("Where", "WRB"), tok("did", "VBD", lemma="do"),
                                  tok("John", "NNP", "PER", "John"), tok("travel", "VB"), tok("to", "IN"),
                                  tok("last", "NN"), tok("week", "NN"), tok("?", ".")],
                      [(3, [("LOC", 0, 1), ("V", 1, 2), ("ARG0", 2, 3), ("ARG1", 4, 5), ("TMP", 5, 7)])],
                      phrases=[(3, 5)])
mary = sentence("mary", [tok("Mary", "NNP", "PER", "Mary"), tok("flew", "VBD", lemma="fly"), tok("to", "IN"),
                         tok("London", "NNP", "LOC", "London"), tok("last", "NN"), tok("month", "NN"),
                         tok(P, P)],
                [(1, [("ARG0", 0, 1), ("ARG1", 2, 4), ("TMP", 4, 6)])], phrases=[(1, 3)])


def pair(decl, *questions):
    return {"declarative": decl, "interrogatives": list(questions)}


write_jsonl(os.path.join(OUT, "running_pairs.jsonl"),
            [pair(amanda, amanda_who, amanda_what), pair(doughnut, doughnut_what), pair(uranus, uranus_why)])
write_jsonl(os.path.join(OUT, "running_inputs.jsonl"), [tom, duncan, solar])
write_jsonl(os.path.join(OUT, "john_pairs.jsonl"), [pair(john, john_where)])
write_jsonl(os.path.join(OUT, "mary.jsonl"), [mary])

# Tagged exactly as in the MSM localization listing.
lincoln = sentence("lincoln", [tok("Abraham", "NNP", "PER", "Abraham"), tok("Lincoln", "NNP", "PER", "Lincoln"),
                               tok("was", "VBZ", lemma="be"), tok("the", "DT"), tok("16th", "JJ"),
                               tok("president", "NN"), tok("of", "IN"), tok("the", "DT"),
                               tok("United", "NNP", "LOC", "United"), tok("States", "NNP", "LOC", "States")],
                   [(2, [("ARG1", 0, 2), ("ARG2", 3, 10)])])
write_jsonl(os.path.join(OUT, "lincoln.jsonl"), [lincoln])

# Preprocessing cases.
but_books = sentence("but-books", [tok("But", "CC"), tok("books", "NNS", lemma="book"), tok("do", "VBP"),
                                   tok("not", "RB"), tok("change", "VB"), tok(P, P)],
                     [(4, [("ARG1", 1, 2), ("NEG", 3, 4)])])
and_so = sentence("and-so", [tok("And", "CC"), tok("so", "CC"), tok("the", "DT"), tok("work", "NN"),
                             tok("began", "VBD", lemma="begin"), tok(P, P)],
                  [(4, [("ARG1", 2, 4)])])
it_is_it = sentence("it-is-it", [tok("It", "PRP"), tok("is", "VBZ", lemma="be"), tok("it", "PRP"), tok(P, P)],
                    [(1, [("ARG1", 0, 1), ("ARG2", 2, 3)])])
where_boston = sentence("where-boston", [tok("Where", "WRB"), tok("is", "VBZ", lemma="be"),
                                         tok("Boston", "NNP", "LOC", "Boston"), tok("?", ".")],
                        [(1, [("LOC", 0, 1), ("ARG1", 2, 3)])])
imperative = sentence("imperative", [tok("Read", "VB"), tok("the", "DT"), tok("long", "JJ"), tok("report", "NN"),
                                     tok("about", "IN"), tok("river", "NN"), tok("pollution", "NN"),
                                     tok("carefully", "RB"), tok(P, P)],
                      [(0, [("ARG1", 1, 7), ("MNR", 7, 8)])])
write_jsonl(os.path.join(OUT, "preprocess_sentences.jsonl"),
            [but_books, and_so, it_is_it, where_boston, imperative])

# Questions an operator would type for the Duncan Watts teach request.
duncan_who = sentence("duncan-q1", [tok("Who", "WP"), tok("agrees", "VBZ", lemma="agree"), tok("with", "IN"),
                                    tok("the", "DT"), tok("conclusion", "NN"), tok("?", ".")],
                      [(1, [("ARG0", 0, 1), ("ARG1", 2, 5)])], phrases=[(1, 3)])
duncan_what = sentence("duncan-q2", [tok("What", "WP"), tok("does", "VBZ", lemma="do"),
                                     tok("Duncan", "NNP", "PER", "Duncan"), tok("Watts", "NNP", "PER", "Watts"),
                                     tok("agree", "VB"), tok("with", "IN"), tok("?", ".")],
                       [(4, [("ARG1", 0, 1), ("V", 1, 2), ("ARG0", 2, 4), ("ARG1", 5, 6)])], phrases=[(4, 6)])
write_jsonl(os.path.join(OUT, "duncan_questions.jsonl"), [duncan_who, duncan_what])
