"""Round-trip corpus: the example documents plus seeded generated ones."""

import random
from pathlib import Path

DATA = Path(__file__).parent / "data"


def example_documents():
    return {p.stem: p.read_text() for p in sorted(DATA.glob("*.msm"))}


def generated_document(seed: int) -> str:
    rng = random.Random(seed)
    lines = [f"# generated {seed}"]
    spaces = {}
    for s in range(rng.randint(1, 3)):
        name = f"S{s}"
        k = rng.randint(0 if s else 1, 4)
        bound = rng.randint(0, 6)
        elems = [rng.choice(["e", "v", "w"]) + str(i) for i in range(k)]
        if rng.random() < 0.3:
            elems = [str(i) for i in range(k)]  # numeric element names
        spaces[name] = (elems, bound)
        lines.append(f"space {name}^{bound} {{ {', '.join(elems)} }}")
    for i in range(rng.randint(0, 4)):
        name = rng.choice(list(spaces))
        elems, bound = spaces[name]
        chosen = [e for e in elems if rng.random() < 0.7]
        body = ", ".join(f"{rng.randint(0, bound)}/{e}" for e in chosen)
        comment = "   # partial" if len(chosen) < len(elems) else ""
        lines.append(f"mset M{i} in {name} = {{ {body} }}{comment}")
    nonempty = [n for n, (e, _) in spaces.items() if e]
    for i in range(rng.randint(0, 2)):
        d = rng.choice(nonempty)
        c = rng.choice(nonempty)
        (de, m), (ce, n) = spaces[d], spaces[c]
        if m == 0 and n > 0:
            continue
        pairs = ", ".join(f"{x}->{rng.choice(ce)}" for x in de)
        if m == 0:
            values = [0]
        else:
            values = [0] + sorted(rng.randint(0, n) for _ in range(m - 1)) + [n]
        header = f"{d}^{m} -> {c}^{n}" if rng.random() < 0.5 else f"{d} -> {c}"
        lines.append(f"map f{i} : {header} {{ u: {pairs} ; p: {','.join(map(str, values))} }}")
    return "\n".join(lines) + "\n"


def corpus():
    docs = dict(example_documents())
    docs["empty"] = ""
    docs["comments-only"] = "# nothing here\n\n   # still nothing\n"
    for seed in range(24):
        docs[f"gen{seed:02d}"] = generated_document(seed)
    return docs
