from conformal_domains.listeners.dot_status_listener import DotStatusListener
from conformal_domains.listeners.listener import Listener
from conformal_domains.listeners.property_status_listener import PropertyStatusListener
