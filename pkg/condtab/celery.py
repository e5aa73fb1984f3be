import os

from celery import Celery

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'condtab.settings')

app = Celery('condtab')

# Read every CELERY_* key from the Django settings.
app.config_from_object('django.conf:settings', namespace='CELERY')
app.autodiscover_tasks()
