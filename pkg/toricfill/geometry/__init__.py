from __future__ import absolute_import # Python2 compatibility
