from django.apps import AppConfig
from django.core.exceptions import ImproperlyConfigured


class LocalizationConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'localization'
    verbose_name = 'Higher-rank DT invariants by localization'

    def ready(self):
        from django.conf import settings

        from localization import conventions

        if settings.QUOTDT_CHART_CONVENTION not in conventions.CHART_CONVENTIONS:
            raise ImproperlyConfigured(
                f"QUOTDT_CHART_CONVENTION must be one of {conventions.CHART_CONVENTIONS}")
        if settings.QUOTDT_BUNDLE_CONVENTION not in conventions.BUNDLE_CONVENTIONS:
            raise ImproperlyConfigured(
                f"QUOTDT_BUNDLE_CONVENTION must be one of {conventions.BUNDLE_CONVENTIONS}")
        if settings.QUOTDT_TRIALS < conventions.MIN_TRIALS:
            raise ImproperlyConfigured(f"QUOTDT_TRIALS must be at least {conventions.MIN_TRIALS}")
