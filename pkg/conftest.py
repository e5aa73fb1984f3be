import os

import django

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'condtab.settings')
django.setup()
