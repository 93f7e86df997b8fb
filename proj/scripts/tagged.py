"""Helpers for writing oracle-tagged sentences as JSON records."""

import json


def tok(text, pos, ne="", lemma=None):
    return {"text": text, "lemma": lemma if lemma is not None else text.lower(), "pos": pos, "ne": ne}


def sentence(sid, tokens, frames, root=None, heads=None, phrases=(), constituency=None,
             article="", ordinal=0):
    """frames: list of (predicate, [(role, start, end), ...])."""
    if root is None:
        root = frames[0][0]
    if heads is None:
        heads = [root] * len(tokens)
        heads[root] = -1
    return {
        "id": sid,
        "tokens": tokens,
        "frames": [{"v": v, "args": [{"role": r, "start": s, "end": e} for r, s, e in args]}
                   for v, args in frames],
        "dep_heads": heads,
        "constituency": constituency,
        "source": {"article": article, "ordinal": ordinal},
        **({"phrases": [{"start": s, "end": e} for s, e in phrases]} if phrases else {}),
    }


def write_jsonl(path, records):
    with open(path, "w", encoding="utf-8") as out:
        for r in records:
            out.write(json.dumps(r, ensure_ascii=False) + "\n")
