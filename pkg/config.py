import os

from dotenv import load_dotenv

load_dotenv()

# Word size w: leaves hold between w^2 / 2 and w^2 * 2 bits
WORD_SIZE = int(os.environ.get("SUCCINCT_WORD_SIZE", "64"))
TEST_WORD_SIZE = 8

LEAF_LOW = WORD_SIZE * WORD_SIZE // 2
LEAF_HIGH = WORD_SIZE * WORD_SIZE * 2

# Bits per block of the static rank directory
RANK_BLOCK_SIZE = int(os.environ.get("SUCCINCT_RANK_BLOCK_SIZE", "512"))

# Largest bit string accepted in a single HTTP query
MAX_QUERY_BITS = 1 << 20

SECRET_KEY = os.environ.get("SUCCINCT_SECRET_KEY", "replace-this-with-a-random-secret")
WTF_CSRF_ENABLED = False
