"""Canonical .osd serialization for the generator (mirrors the repo format)."""


def serialize(diag):
    out = []
    out.append("osd 1")
    out.append(f"kind {diag['kind']}")
    out.append(f"points {diag['n_points']}")
    if diag['kind'] == 'orbifold':
        out.append(f"order {diag['order']}")
    out.append("tau " + " ".join(str(x) for x in diag['tau']))
    for i, vis in enumerate(diag['strands'], start=1):
        out.append(f"strand {i}: " + " ".join(f"c{c}" for c in vis))
    for cid in sorted(diag['crossings']):
        c = diag['crossings'][cid]
        line = (f"crossing c{cid}: a=({c['a'][0]},{c['a'][1]})"
                f" b=({c['b'][0]},{c['b'][1]}) chir={c['chir']}")
        if c.get('at') is not None:
            line += f" at={c['at']}"
        out.append(line)
    if diag['kind'] == 'orbifold':
        out.append("cut: " + " ".join(f"({s},{j},{fl})" for (s, j, fl) in diag['cut']))
    return "\n".join(out) + "\n"


def parse(text):
    diag = {'strands': [], 'crossings': {}, 'cut': [], 'order': 1, 'tau': None,
            'kind': None, 'n_points': None}
    for raw in text.splitlines():
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        if line.startswith('osd '):
            assert line == 'osd 1'
        elif line.startswith('kind '):
            diag['kind'] = line.split()[1]
        elif line.startswith('points '):
            diag['n_points'] = int(line.split()[1])
        elif line.startswith('order '):
            diag['order'] = int(line.split()[1])
        elif line.startswith('tau '):
            diag['tau'] = [int(x) for x in line.split()[1:]]
        elif line.startswith('strand '):
            head, rest = line.split(':', 1)
            idx = int(head.split()[1])
            assert idx == len(diag['strands']) + 1
            diag['strands'].append([int(t[1:]) for t in rest.split()])
        elif line.startswith('crossing '):
            head, rest = line.split(':', 1)
            cid = int(head.split()[1][1:])
            rec = {'at': None}
            for tok in rest.split():
                k, v = tok.split('=', 1)
                if k in ('a', 'b'):
                    s, pos = v.strip('()').split(',')
                    rec[k] = (int(s), int(pos))
                elif k == 'chir':
                    rec['chir'] = v
                elif k == 'at':
                    rec['at'] = int(v)
            diag['crossings'][cid] = rec
        elif line.startswith('cut:'):
            rest = line.split(':', 1)[1]
            for tok in rest.split():
                s, j, fl = tok.strip('()').split(',')
                diag['cut'].append((int(s), int(j), fl))
        else:
            raise ValueError(f"bad line: {raw}")
    if diag['tau'] is None:
        diag['tau'] = []
    return diag
