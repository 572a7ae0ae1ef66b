import os

# Celery runs eagerly under test; an empty value also keeps a .env broker
# URL from being picked up
os.environ["CELERY_BROKER_URL"] = ""
