from django.apps import AppConfig


class TableauxConfig(AppConfig):
    name = 'tableaux'
