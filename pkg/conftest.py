import os.path as osp
import sys

# tests import the top-level packages from the checkout
sys.path.insert(0, osp.dirname(osp.abspath(__file__)))
