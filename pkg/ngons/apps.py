from django.apps import AppConfig


class NgonsConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "ngons"
    verbose_name = "Bounded n-gon search"
