"""Converts Princeton WordNet data.* files to the lexical-graph JSON format.

usage: convert_wordnet.py WORDNET_DIR OUT.json [--words FILE] [--max-senses N]

Without --words the whole lexicon is converted. With it, the senses of the
listed words (first N per POS), their hypernym closure and their antonyms
are kept.
"""

import argparse
import json
import os

POS_FILES = {"n": "data.noun", "v": "data.verb", "a": "data.adj", "r": "data.adv"}


def parse(wordnet_dir):
    synsets = {}
    index = {}
    for pos, name in POS_FILES.items():
        with open(os.path.join(wordnet_dir, name), encoding="latin-1") as f:
            for line in f:
                if line.startswith("  "):
                    continue
                fields = line.split(" | ")[0].split()
                offset, ss_type = fields[0], fields[2]
                key = f"{pos}{offset}"
                n_words = int(fields[3], 16)
                lemmas = []
                for i in range(n_words):
                    word = fields[4 + 2 * i]
                    word = word.split("(")[0].replace("_", " ")
                    lemmas.append(word)
                at = 4 + 2 * n_words
                n_ptrs = int(fields[at])
                hypernyms, antonyms = [], []
                for i in range(n_ptrs):
                    sym, target, tpos, _ = fields[at + 1 + 4 * i: at + 5 + 4 * i]
                    tpos = "a" if tpos == "s" else tpos
                    if sym in ("@", "@i"):
                        hypernyms.append(f"{tpos}{target}")
                    elif sym == "!":
                        antonyms.append(f"{tpos}{target}")
                synsets[key] = {"pos": "a" if ss_type == "s" else pos, "lemmas": lemmas,
                                "hypernyms": hypernyms, "antonyms": antonyms}
                for lemma in lemmas:
                    index.setdefault((lemma.lower(), synsets[key]["pos"]), []).append(key)
    return synsets, index


def sense_name(synsets, key, names):
    if key not in names:
        s = synsets[key]
        base = f"{s['lemmas'][0].lower().replace(' ', '_')}.{s['pos']}"
        n = 1
        while f"{base}.{n:02d}" in names.values():
            n += 1
        names[key] = f"{base}.{n:02d}"
    return names[key]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("wordnet_dir")
    ap.add_argument("out")
    ap.add_argument("--words")
    ap.add_argument("--max-senses", type=int, default=3)
    args = ap.parse_args()

    synsets, index = parse(args.wordnet_dir)
    if args.words:
        keep = set()
        with open(args.words) as f:
            words = [w.strip() for w in f if w.strip() and not w.startswith("#")]
        for w in words:
            for pos in "nvar":
                keep.update(index.get((w.lower(), pos), [])[: args.max_senses])
        for key in list(keep):
            keep.update(synsets[key]["antonyms"])
        frontier = list(keep)
        while frontier:
            key = frontier.pop()
            for h in synsets[key]["hypernyms"]:
                if h not in keep:
                    keep.add(h)
                    frontier.append(h)
    else:
        keep = set(synsets)

    names = {}
    ordered = sorted(keep, key=lambda k: (synsets[k]["pos"], int(k[1:])))
    for key in ordered:
        sense_name(synsets, key, names)
    out = {"senses": [], "hypernyms": [], "antonyms": []}
    for key in ordered:
        s = synsets[key]
        out["senses"].append({"id": names[key], "pos": s["pos"], "lemmas": s["lemmas"]})
        for h in s["hypernyms"]:
            if h in keep:
                out["hypernyms"].append([names[key], names[h]])
        for a in s["antonyms"]:
            pair = [names[key], names[a]] if a in keep else None
            if pair and pair[0] < pair[1] and pair not in out["antonyms"]:
                out["antonyms"].append(pair)
    with open(args.out, "w") as f:
        f.write("{\n")
        for i, field in enumerate(("senses", "hypernyms", "antonyms")):
            rows = ",\n".join("  " + json.dumps(r, ensure_ascii=False) for r in out[field])
            f.write(f'"{field}": [\n{rows}\n]' + (",\n" if i < 2 else "\n"))
        f.write("}\n")
    print(f"{len(out['senses'])} senses, {len(out['hypernyms'])} hypernym edges, "
          f"{len(out['antonyms'])} antonym pairs")


if __name__ == "__main__":
    main()
