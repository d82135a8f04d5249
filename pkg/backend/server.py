from flask import Flask, request, jsonify
import os
import sys
import json

sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from hilbquant.errors import UserInputError
from hilbquant.logger import get_logger
from hilbquant.pipeline import QuantumPipeline, verify
from models import SessionLocal, OperatorRecord, VerificationRun, init_db
from middleware import (
    configure_cors,
    error_handler,
    validate_basis,
    validate_format,
    validate_grade,
    validate_request_json,
    validate_suite,
)


app = Flask(__name__)
configure_cors(app)
error_handler(app)
init_db()

logger = get_logger(__name__)


@app.route('/')
def health_check():
    return jsonify({'status': 'ok'})


# --------------------
# Operators
# --------------------

@app.route('/api/matrix', methods=['POST'])
@validate_request_json(['m', 'n', 'divisor'])
def matrix_endpoint():
    data = request.get_json()
    m, n = data.get('m'), data.get('n')
    divisor = str(data.get('divisor') or '').strip()
    labels = (data.get('labels') or 'e').strip()
    fmt = (data.get('format') or 'json').strip()

    is_valid, message = validate_grade(m, n)
    if not is_valid:
        return jsonify({'error': message}), 400
    is_valid, message = validate_format(fmt)
    if not is_valid:
        return jsonify({'error': message}), 400

    db = SessionLocal()
    try:
        cached = db.query(OperatorRecord).filter(
            OperatorRecord.m == m,
            OperatorRecord.n == n,
            OperatorRecord.divisor == divisor,
            OperatorRecord.labels == labels,
            OperatorRecord.output_format == fmt,
        ).first()
        if cached:
            payload = cached.payload
        else:
            payload = QuantumPipeline(n, labels).matrix(m, divisor, fmt)
            db.add(OperatorRecord(m=m, n=n, divisor=divisor, labels=labels, output_format=fmt, payload=payload))
            db.commit()
            logger.info('cached M_%s for m=%d n=%d (%s)', divisor, m, n, fmt)

        result = json.loads(payload) if fmt == 'json' else payload
        return jsonify({'result': result, 'cached': bool(cached)}), 200
    finally:
        db.close()


@app.route('/api/two-point', methods=['POST'])
@validate_request_json(['n', 'mu', 'nu'])
def two_point_endpoint():
    data = request.get_json()
    n = data.get('n')
    basis = (data.get('basis') or 'nakajima').strip()
    labels = (data.get('labels') or 'omega').strip()

    is_valid, message = validate_grade(0, n)
    if not is_valid:
        return jsonify({'error': message}), 400
    is_valid, message = validate_basis(basis)
    if not is_valid:
        return jsonify({'error': message}), 400

    pipeline = QuantumPipeline(n, labels)
    value = pipeline.render_two_point(str(data.get('mu') or ''), str(data.get('nu') or ''), basis, 'json')
    return jsonify({'result': json.loads(value)}), 200


# --------------------
# Verification runs
# --------------------

@app.route('/api/verify', methods=['POST'])
@validate_request_json(['suite'])
def verify_endpoint():
    data = request.get_json()
    suite = data.get('suite')

    is_valid, message = validate_suite(suite)
    if not is_valid:
        return jsonify({'error': message}), 400

    params = {}
    for key in ('m', 'n', 'i', 'j'):
        value = data.get(key)
        if value is None:
            continue
        if not isinstance(value, int) or isinstance(value, bool):
            raise UserInputError(f'{key} must be an integer')
        params[key] = value
    max_seconds = data.get('max_seconds')
    if max_seconds is not None and (not isinstance(max_seconds, (int, float)) or isinstance(max_seconds, bool) or max_seconds < 0):
        return jsonify({'error': 'max_seconds must be a non-negative number'}), 400

    report = verify(suite, max_seconds, **params)
    payload = report.to_dict()
    failures = [r for r in payload['results'] if r['status'] == 'fail']

    db = SessionLocal()
    try:
        run = VerificationRun(
            suite=suite,
            parameters_json=json.dumps(params),
            passed=report.passed,
            counterexample_json=json.dumps(failures[0], default=str) if failures else None,
            counts_json=json.dumps(payload['counts']),
            seconds=sum(r.seconds for r in report.results),
        )
        db.add(run)
        db.commit()
        db.refresh(run)
        payload['run_id'] = run.id
    finally:
        db.close()

    return app.response_class(json.dumps(payload, default=str), status=200, mimetype='application/json')


@app.route('/api/runs', methods=['GET'])
def list_runs():
    db = SessionLocal()
    try:
        runs = db.query(VerificationRun).order_by(VerificationRun.created_at.desc(), VerificationRun.id.desc()).all()
        return jsonify({'runs': [r.to_dict() for r in runs]}), 200
    finally:
        db.close()


if __name__ == '__main__':
    app.run(debug=True, port=8080)
