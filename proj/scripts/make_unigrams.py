"""Writes the bundled unigram table (word<TAB>probability) from wordfreq."""

import sys

import wordfreq

out = sys.argv[1] if len(sys.argv) > 1 else "data/unigrams.tsv"
n = int(sys.argv[2]) if len(sys.argv) > 2 else 20000
with open(out, "w") as f:
    for word in wordfreq.top_n_list("en", n):
        if not any(c.isalpha() for c in word):
            continue
        f.write(f"{word}\t{wordfreq.word_frequency(word, 'en'):.8g}\n")
