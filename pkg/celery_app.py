import logging

from celery import Celery
from celery.signals import worker_process_init

# Importing settings loads the .env file before the broker URL is read
from src.settings import CELERY_BROKER_URL, LOG_LEVEL
from src.log import configure_logging

logger = logging.getLogger("src.celery")

# --- Celery Application Definition ---

# 'src' is the project module name used for naming tasks; 'include' points
# Celery at the module holding the @shared_task definitions.
if CELERY_BROKER_URL:
    app = Celery(
        'src',
        broker=CELERY_BROKER_URL,
        backend=CELERY_BROKER_URL,  # Redis stores the row results too
        include=['src.tasks'],
    )
else:
    # No broker configured: run every task in-process, in call order
    logger.info("CELERY_BROKER_URL not set; Celery tasks run eagerly in-process")
    app = Celery('src', broker='memory://', backend='cache+memory://', include=['src.tasks'])
    app.conf.update(task_always_eager=True, task_eager_propagates=True)

app.conf.update(
    task_serializer='json',
    accept_content=['json'],
    result_serializer='json',
    timezone='UTC',
    enable_utc=True,
    task_acks_late=True,
    task_reject_on_worker_lost=True,
)


@worker_process_init.connect
def _setup_worker_logging(**kwargs):
    configure_logging(LOG_LEVEL)
