#!/usr/bin/env python3
# File: AVFusionHub/manage.py

import os

from avfusion.cli import cli

if __name__ == '__main__':
    os.environ.setdefault('AVFUSION_CONFIG', 'development')
    cli(prog_name='manage.py')
