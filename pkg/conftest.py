import os

import django

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'permutahedra_project.settings')
django.setup()
