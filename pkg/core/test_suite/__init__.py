# Core app tests package