import os

from dotenv import load_dotenv, find_dotenv

load_dotenv(find_dotenv())

LOG_LEVEL = os.environ.get('HILBQUANT_LOG_LEVEL', 'INFO')
MAX_SECONDS = int(os.environ.get('HILBQUANT_MAX_SECONDS', '1800'))
SEED = int(os.environ.get('HILBQUANT_SEED', '20240601'))

_DEFAULT_DB_PATH = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), 'backend', 'hilbquant.db')
DATABASE_URL = os.environ.get('HILBQUANT_DATABASE_URL', f'sqlite:///{_DEFAULT_DB_PATH}')
CORS_ORIGINS = os.environ.get('HILBQUANT_CORS_ORIGINS', '*')
