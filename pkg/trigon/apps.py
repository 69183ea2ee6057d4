from django.apps import AppConfig


class TrigonConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "trigon"
    verbose_name = "Law-of-cosines verification"
