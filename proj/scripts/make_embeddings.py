"""Writes the small bundled word-vector table.

Every anchor word gets its own axis. A neighbour of an anchor with target
similarity s is s*e_anchor + sqrt(1-s^2)*e_own, so its cosine with the
anchor is s and with every other anchor 0. Multiword entries use "_".
"""

import math
import sys

NEIGHBOURS = {
    "news": [("breaking_news", 0.80), ("headlines", 0.72), ("reports", 0.66), ("gossip", 0.61),
             ("broadcast", 0.50)],
    "knowledge": [("knowladge", 0.84), ("understanding", 0.76), ("expertise", 0.70), ("wisdom", 0.64)],
    "profession": [("professions", 0.83), ("association", 0.71), ("engineering", 0.64)],
    "choice": [("choices", 0.82), ("way", 0.69), ("selection", 0.90)],
    "mistake": [("mistakes", 0.84), ("blunder", 0.92)],
    "decision": [("decisions", 0.83), ("request", 0.70), ("proposition", 0.65)],
    "economic": [("economical", 0.80), ("political", 0.72), ("fiscal", 0.87)],
    "door": [("doors", 0.84), ("stairwell", 0.70), ("driveway", 0.66)],
    "creak": [("creaks", 0.81), ("knock", 0.68)],
    "footsteps": [("steps", 0.86), ("whispers", 0.62)],
    "life": [("happiness", 0.70), ("experience", 0.65), ("lives", 0.82)],
    "cost": [("risk", 0.71), ("price", 0.88), ("costs", 0.84)],
    "insights": [("perspectives", 0.73), ("findings", 0.69), ("valuables", 0.61)],
    "experienced": [("inexperienced", 0.74), ("seasoned", 0.86), ("skilled", 0.80)],
    "internet": [("supernet", 0.72), ("cognet", 0.67), ("web", 0.89)],
    "molecule": [("polymer", 0.74), ("coenzyme", 0.70), ("trimer", 0.66), ("molecules", 0.85)],
    "victory": [("defeat", 0.75), ("triumph", 0.88), ("win", 0.70)],
    "widget": [("gadget", 0.78), ("gizmo", 0.72)],
}


def main(out_path):
    words = []
    anchors = []
    for anchor, ns in NEIGHBOURS.items():
        anchors.append(anchor)
        words.append(anchor)
        words.extend(n for n, _ in ns)
    axis = {w: i for i, w in enumerate(words)}
    dim = len(words)
    rows = []
    for anchor, ns in NEIGHBOURS.items():
        v = [0.0] * dim
        v[axis[anchor]] = 1.0
        rows.append((anchor, v))
        for n, s in ns:
            v = [0.0] * dim
            v[axis[anchor]] = s
            v[axis[n]] = math.sqrt(1.0 - s * s)
            rows.append((n, v))
    with open(out_path, "w") as f:
        f.write(f"{len(rows)} {dim}\n")
        for w, v in rows:
            f.write(w + " " + " ".join(f"{x:.9g}" for x in v) + "\n")
    print(f"{len(rows)} words, dimension {dim}")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "data/embeddings.txt")
