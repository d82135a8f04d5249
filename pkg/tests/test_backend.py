import pytest

pytest.importorskip('flask')
pytest.importorskip('flask_cors')
pytest.importorskip('sqlalchemy')

import server  # noqa: E402
from middleware import validate_grade  # noqa: E402


@pytest.fixture
def client():
    server.app.config['TESTING'] = True
    with server.app.test_client() as client:
        yield client


def test_health(client):
    assert client.get('/').get_json() == {'status': 'ok'}


def test_validate_grade():
    assert validate_grade(2, 1) == (True, '')
    assert not validate_grade(-1, 1)[0]
    assert not validate_grade(2, 0)[0]
    assert not validate_grade('2', 1)[0]
    assert not validate_grade(9, 1)[0]


def test_matrix_is_cached(client):
    body = {'m': 0, 'n': 1, 'divisor': 'D'}
    first = client.post('/api/matrix', json=body)
    assert first.status_code == 200
    assert first.get_json()['result']['m'] == 0
    assert first.get_json()['cached'] is False
    second = client.post('/api/matrix', json=body)
    assert second.get_json()['cached'] is True
    assert second.get_json()['result'] == first.get_json()['result']


def test_matrix_errors(client):
    assert client.post('/api/matrix', json={'m': 1, 'n': 1}).status_code == 400
    response = client.post('/api/matrix', json={'m': 1, 'n': 1, 'divisor': 'omega:7'})
    assert response.status_code == 400
    assert response.get_json()['kind'] == 'InvalidSelector'
    assert client.post('/api/matrix', json={'m': 1, 'n': 1, 'divisor': 'D', 'format': 'pdf'}).status_code == 400
    assert client.post('/api/matrix', data='m=1').status_code == 400


def test_two_point(client):
    response = client.post('/api/two-point', json={'n': 1, 'mu': 'vac', 'nu': 'vac'})
    assert response.status_code == 200
    assert response.get_json()['result'] == {'punctual': [], 'nonpunctual': []}
    mismatch = client.post('/api/two-point', json={'n': 1, 'mu': '1(w1)', 'nu': 'vac'})
    assert mismatch.status_code == 400
    assert mismatch.get_json()['kind'] == 'GradeMismatch'


def test_verify_records_runs(client):
    response = client.post('/api/verify', json={'suite': 'kernel'})
    assert response.status_code == 200
    report = response.get_json()
    assert report['passed'] is True
    runs = client.get('/api/runs').get_json()['runs']
    assert runs[0]['id'] == report['run_id']
    assert runs[0]['suite'] == 'kernel'
    assert runs[0]['counterexample'] is None


def test_verify_rejects_bad_input(client):
    assert client.post('/api/verify', json={'suite': 'nope'}).status_code == 400
    assert client.post('/api/verify', json={'suite': 'kernel', 'm': 'two'}).status_code == 400
    assert client.post('/api/verify', json={'suite': 'kernel', 'max_seconds': 'soon'}).status_code == 400


def test_unknown_endpoint(client):
    assert client.get('/api/nothing').status_code == 404
