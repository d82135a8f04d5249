from flask import request, jsonify
from functools import wraps
from werkzeug.exceptions import HTTPException

from hilbquant.config import CORS_ORIGINS
from hilbquant.errors import HilbQuantError
from hilbquant.export import FORMATS
from hilbquant.logger import get_logger
from hilbquant.pipeline import BASES
from hilbquant.suites import SUITE_ALIASES, SUITES

logger = get_logger(__name__)

# Largest grade the service computes on request; bigger runs belong on the CLI
MAX_SERVICE_GRADE = 4
MAX_SERVICE_RANK = 3


def validate_grade(m, n) -> tuple[bool, str]:
    """
    Validate (m, n) for an operator request
    Returns (is_valid, error_message)
    """
    if not isinstance(m, int) or isinstance(m, bool) or not isinstance(n, int) or isinstance(n, bool):
        return False, 'm and n must be integers'
    if m < 0 or n < 1:
        return False, 'Need m >= 0 and n >= 1'
    if m > MAX_SERVICE_GRADE or n > MAX_SERVICE_RANK:
        return False, f'm <= {MAX_SERVICE_GRADE} and n <= {MAX_SERVICE_RANK} on the service; use the CLI for larger grades'
    return True, ''


def validate_format(fmt: str) -> tuple[bool, str]:
    if fmt not in FORMATS:
        return False, f'format must be one of {", ".join(FORMATS)}'
    return True, ''


def validate_basis(basis: str) -> tuple[bool, str]:
    if basis not in BASES:
        return False, f'basis must be one of {", ".join(BASES)}'
    return True, ''


def validate_suite(suite: str) -> tuple[bool, str]:
    if suite not in SUITES and suite not in SUITE_ALIASES:
        return False, f'Unknown suite {suite!r}'
    return True, ''


def validate_request_json(required_fields: list):
    """Decorator to validate JSON request has required fields"""
    def decorator(f):
        @wraps(f)
        def decorated_function(*args, **kwargs):
            if not request.is_json:
                return jsonify({'error': 'Request must be JSON'}), 400

            data = request.get_json(silent=True)
            if not isinstance(data, dict):
                return jsonify({'error': 'Request body must be a JSON object'}), 400
            missing_fields = [field for field in required_fields if field not in data]

            if missing_fields:
                return jsonify({
                    'error': f'Missing required fields: {", ".join(missing_fields)}'
                }), 400

            return f(*args, **kwargs)

        return decorated_function
    return decorator


def configure_cors(app):
    """Configure CORS with proper settings"""
    from flask_cors import CORS

    CORS(app,
         resources={r"/*": {
             "origins": CORS_ORIGINS,
             "methods": ["GET", "POST", "OPTIONS"],
             "allow_headers": ["Content-Type"]
         }})


def error_handler(app):
    """Configure global error handlers"""

    @app.errorhandler(HilbQuantError)
    def engine_error(error):
        if error.status_code >= 500:
            logger.error('engine failure: %s', error.message)
        return jsonify(error.to_dict()), error.status_code

    @app.errorhandler(HTTPException)
    def http_error(error):
        return jsonify({'error': error.description or error.name}), error.code

    @app.errorhandler(404)
    def not_found(error):
        return jsonify({'error': 'Endpoint not found'}), 404

    @app.errorhandler(405)
    def method_not_allowed(error):
        return jsonify({'error': 'Method not allowed'}), 405
