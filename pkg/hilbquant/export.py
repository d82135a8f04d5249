"""Serialization of operators and two-point values (json, latex, text)."""
import json

from .combinat import format_weighted
from .exactalg import ratfunc_to_json, to_latex, to_text

FORMATS = ('json', 'latex', 'text')


def _matrix_json(A) -> list:
    return [[ratfunc_to_json(entry) for entry in row] for row in A.to_list()]


def _root_json(alpha):
    return [alpha.i, alpha.j] if alpha is not None else None


def operator_to_dict(op, divisor_label: str = None) -> dict:
    """Exact closed form of a (normalized) ClosedFormOperator."""
    space = op.space
    payload = {
        'm': op.m,
        'n': space.n,
        'basis': [format_weighted(key, space.labels.names) for key in space.basis(op.m)],
        'classical': _matrix_json(op.classical),
        'quantum': [
            {'alpha': _root_json(t.alpha), 'k': t.k, 'matrix': _matrix_json(t.matrix), 'shape': t.shape}
            for t in op.terms
        ],
    }
    if divisor_label is not None:
        payload['divisor'] = divisor_label
        payload['labels'] = space.labels.name
    return payload


def operator_to_latex(op) -> str:
    cf = op.cf
    rows = op.assemble().to_list()
    body = ' \\\\\n'.join(' & '.join(to_latex(entry, cf) if entry else '0' for entry in row) for row in rows)
    return '\\begin{pmatrix}\n' + body + '\n\\end{pmatrix}'


def operator_to_text(op) -> str:
    cf = op.cf
    space = op.space
    lines = ['basis: ' + ', '.join(format_weighted(k, space.labels.names) for k in space.basis(op.m))]
    for r, row in enumerate(op.assemble().to_list(), start=1):
        lines.append(f'row {r}: ' + ' | '.join(to_text(entry, cf) if entry else '0' for entry in row))
    return '\n'.join(lines)


def render_operator(op, fmt: str, divisor_label: str = None) -> str:
    if fmt == 'json':
        return json.dumps(operator_to_dict(op, divisor_label), indent=2)
    if fmt == 'latex':
        return operator_to_latex(op)
    if fmt == 'text':
        return operator_to_text(op)
    raise ValueError(f'unknown format {fmt!r}')


def two_point_to_dict(value, cf) -> dict:
    def entry(coefficient):
        return {'text': to_text(coefficient, cf), 'latex': to_latex(coefficient, cf), 'exact': ratfunc_to_json(coefficient)}

    return {
        'punctual': [
            dict(k=k, **entry(c)) for k, c in sorted(value.punctual.items()) if c
        ],
        'nonpunctual': [
            dict(alpha=_root_json(root), k=k, **entry(c))
            for (root, k), c in sorted(value.nonpunctual.items(), key=lambda item: (item[0][0].i, item[0][0].j, item[0][1]))
            if c
        ],
    }


def render_two_point(value, cf, fmt: str) -> str:
    payload = two_point_to_dict(value, cf)
    if fmt == 'json':
        return json.dumps(payload, indent=2)
    field = 'latex' if fmt == 'latex' else 'text'
    log = '\\log' if fmt == 'latex' else 'log'
    lines = []
    for term in payload['punctual']:
        lines.append(f"punctual {log}(1 - (-q)^{term['k']}): {term[field]}")
    for term in payload['nonpunctual']:
        i, j = term['alpha']
        lines.append(f"{log}(1 - (-q)^{term['k']} s_{i}{j}): {term[field]}")
    return '\n'.join(lines) or '0'
